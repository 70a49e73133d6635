#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <string>
#include <tuple>
#include <vector>

#include "multigraph.hpp"

namespace hc {

using BigInt = boost::multiprecision::cpp_int;

enum class Algo { backtrack, held_karp, auto_pick, two_cut_product };

std::string algo_name(Algo a);

struct CountResult {
    BigInt value;
    Algo algo = Algo::backtrack;
    std::chrono::duration<double> elapsed{0};
};

struct HamiltonConfig {
    int hk_cap = 24;   // Held-Karp subset-DP vertex cap
    int jobs = 1;      // worker threads for the backtracker's first-level split
};

// One hamiltonian cycle: vertex sequence plus a per-step flag selecting the
// second copy of a doubled edge.  Canonical: verts[0] is the minimum label
// and verts[1] the smaller of its two cycle neighbors.
struct CycleCertificate {
    std::vector<int> verts;
    std::vector<uint8_t> second_copy;  // step i = edge {verts[i], verts[(i+1)%n]}

    CycleCertificate canonical() const;
    std::string to_line() const;
    static CycleCertificate from_line(const std::string& line);
    // Edge occurrences (u < v, copy) of the cycle, sorted.
    std::vector<std::tuple<int, int, int>> edge_occurrences() const;
    bool operator==(const CycleCertificate&) const = default;
    bool operator<(const CycleCertificate& o) const {
        return std::tie(verts, second_copy) < std::tie(o.verts, o.second_copy);
    }
};

// True iff h is a hamiltonian cycle of g (all vertices once, consecutive
// pairs edges, selected parallel copies available).
bool certificate_valid(const MultiGraph& g, const CycleCertificate& h);

// Exact count of undirected hamiltonian cycles; direction and rotation are
// quotiented out, parallel copies distinguished.  n <= 2 by convention: a
// doubled edge on two vertices is one cycle, everything else has none.
CountResult count_ham_cycles(const MultiGraph& g, Algo algo = Algo::auto_pick,
                             const HamiltonConfig& cfg = {});

// Exact count of hamiltonian paths with endpoints exactly s and t.
CountResult count_ham_st_paths(const MultiGraph& g, int s, int t, Algo algo = Algo::auto_pick,
                               const HamiltonConfig& cfg = {});

// All hamiltonian cycles as canonical certificates, sorted, duplicate-free.
std::vector<CycleCertificate> enumerate_ham_cycles(const MultiGraph& g);

// Backtracking count that stops as soon as the count reaches `limit`;
// returns min(count, limit).  Used for fast hamiltonicity/uniqueness tests.
BigInt count_ham_cycles_limited(const MultiGraph& g, const BigInt& limit);
BigInt count_ham_st_paths_limited(const MultiGraph& g, int s, int t, const BigInt& limit);

bool is_hamiltonian(const MultiGraph& g);
bool is_uniquely_hamiltonian(const MultiGraph& g);

// Every pair of non-adjacent vertices joined by some hamiltonian path;
// vacuously true for complete graphs.  Simple graphs only.
bool all_nonadjacent_pairs_traceable(const MultiGraph& g);

}  // namespace hc
