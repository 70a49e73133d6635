#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hamilton.hpp"
#include "multigraph.hpp"

namespace hc {

// Degree-constrained isomorphism-free graph class.
struct GenerationSpec {
    enum class Kind {
        exactly_k,    // k-regular
        two_degrees,  // degrees in {k,l}, at least one vertex of each
        nearly_k,     // degree k except two vertices of smaller degree
    };
    Kind kind = Kind::exactly_k;
    int n = 0;
    int k = 0;
    int l = 0;  // two_degrees only
    bool connected = true;
    bool bipartite_only = false;
};

struct GenerationLimits {
    int max_n = 14;      // desk cap; commands refuse beyond this without force
    bool force = false;
};

// Rough log10 of the labeled search space, printed before refusing a run
// beyond the cap.
double generation_effort_log10(const GenerationSpec& spec);

// Exactly one representative per isomorphism class satisfying the spec,
// sorted by canonical form.  Infeasible degree parity yields an empty list.
std::vector<MultiGraph> generate_graphs(const GenerationSpec& spec,
                                        const GenerationLimits& limits = {});

// Minimum hamiltonian cycle count over a hamiltonian degree class.
struct HnResult {
    bool infinite = false;                // no hamiltonian member (or empty class)
    BigInt value;                         // minimum count when finite
    std::vector<MultiGraph> witnesses;    // all graphs attaining it, canonical order
    size_t class_size = 0;                // generated graphs considered
};

// h_n(k) (l omitted) or h_n(k,l): minimum over connected hamiltonian members
// of the class, with every minimizer returned.
HnResult compute_hn(int k, std::optional<int> l, int n, const GenerationLimits& limits = {},
                    const HamiltonConfig& cfg = {});

// h_n^2(k): minimum over hamiltonian k-regular graphs of connectivity
// exactly 2, assembled from pairs of nearly-k-regular sides glued at their
// terminals; every witness is re-verified by a direct count and a
// connectivity check.
HnResult compute_hn2(int k, int n, const GenerationLimits& limits = {},
                     const HamiltonConfig& cfg = {});

// Uniform-ish random k-regular simple graph by stub pairing with rejection.
MultiGraph random_regular_graph(int n, int k, std::mt19937_64& rng);

}  // namespace hc
