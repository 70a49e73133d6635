#pragma once

#include <cstdint>
#include <vector>

#include "generate.hpp"
#include "hamilton.hpp"
#include "multigraph.hpp"

namespace hc {

// A graph together with a hamiltonian cycle of it; red = cycle edges,
// green = the rest.
struct RedGreenInstance {
    MultiGraph full;      // green + red
    MultiGraph green;     // full minus the cycle's edges
    CycleCertificate red; // the cycle

    // Build from a graph and one of its hamiltonian cycles.
    static RedGreenInstance of(const MultiGraph& g, const CycleCertificate& h);
    // Build from a green graph and a cycle of its complement.
    static RedGreenInstance add_cycle(const MultiGraph& green, const CycleCertificate& h);
};

// All inclusion-minimal dominating sets (closed neighborhoods) as vertex
// bitmasks, sorted.  Branch-and-reduce on the first undominated vertex with
// private-neighbor pruning.
std::vector<uint64_t> minimal_dominating_sets(const MultiGraph& g);

// A set independent in the red cycle and dominating in the green graph.
// Scanning minimal dominating sets suffices: independence is subset-closed.
struct HIndependent {
    bool exists = false;
    uint64_t witness = 0;
};
HIndependent has_h_independent_dominating_set(const RedGreenInstance& inst);

// One (G', h) counterexample pair: no minimal dominating set of the green
// graph G' is independent in h.
struct PairReport {
    MultiGraph green;
    CycleCertificate cycle;
    size_t minimal_dominating_count = 0;
};

struct SearchPairsResult {
    long long labeled_pairs = 0;  // cycles as edge sets, per class representative
    long long orbit_pairs = 0;    // cycles up to the automorphism group of G'
    size_t green_classes = 0;
    std::vector<PairReport> reports;  // canonical order
};

// All pairs (G', h): G' r-regular on n vertices (one per isomorphism class),
// h a hamiltonian cycle of complement(G') such that no minimal dominating
// set of G' is h-independent.  Both pair-counting conventions are reported.
SearchPairsResult search_pairs(int r, int n, bool bipartite_only,
                               const GenerationLimits& limits = {}, int jobs = 1,
                               bool connected_green = true);

// Lemma-3 style amplification: ring of m copies of (G' + h) minus a cycle
// edge; re-verifies that the stitched instance still has no independent
// dominating set.
RedGreenInstance amplify_family(const PairReport& report, int m);

}  // namespace hc
