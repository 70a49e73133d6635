#pragma once

#include <optional>

#include "hamilton.hpp"
#include "multigraph.hpp"

namespace hc {

// Multigraph with two distinguished terminal vertices.
struct TerminalGraph {
    MultiGraph graph;
    int u = 0, v = 1;
};

// Identify a.u with b.u and a.v with b.v on the disjoint union.  The glued
// graph has n_a + n_b - 2 vertices (a's labels kept, b's non-terminals
// appended).  Cycle count of the result equals path(a) * path(b).
MultiGraph glue_at_terminals(const TerminalGraph& a, const TerminalGraph& b);

// Observation-style product count at a 2-cut {u,v}: the number of
// hamiltonian cycles equals p2 * p3 where p_i counts hamiltonian u-v paths
// of the side graphs G[V_i ∪ {u,v}].  Errors if {u,v} does not split g
// into exactly two components.
CountResult count_via_2cut(const MultiGraph& g, int u, int v,
                           const HamiltonConfig& cfg = {});

// The (†) operation: g must have exactly two hamiltonian cycles and a unique
// even-degree vertex x; the edge copy (eu,ev,copy) must lie on exactly one of
// the two cycles and avoid x.  Splices a Petersen-minus-vertex gadget across
// the deleted edge and raises deg(x) by 2; the result again has exactly two
// hamiltonian cycles, validated by enumeration.
MultiGraph dagger(const MultiGraph& g, int x, int eu, int ev, int copy = 0);

// Scans for the first admissible (x, edge copy) and applies (†).
MultiGraph dagger_auto(const MultiGraph& g);

// Claim-3 doubling: remove a cubic vertex v from two copies of g and rewire
// the six dangling edges a->c', b->a', c->b'; the roles a,b,c are chosen
// automatically from the two hamiltonian cycles of g (a,c on one, b,c on the
// other).  Result is uniquely hamiltonian, validated.  If v is absent, every
// vertex is tried in label order.
MultiGraph double_rewire(const MultiGraph& g, std::optional<int> v = std::nullopt);

// Replace a cubic vertex by a triangle; on cubic inputs this preserves the
// hamiltonian cycle count.
MultiGraph expand_triangle(const MultiGraph& g, int v);

// Insert a 2-valent vertex on every edge of the hamiltonian cycle h (or all
// but the wraparound edge when keep_one).  Output is uniquely hamiltonian,
// validated.
MultiGraph subdivide_cycle_edges(const MultiGraph& g, const CycleCertificate& h, bool keep_one);

// Ring of m copies of g - e where e lies on h: copy i's exit endpoint is
// joined to copy i+1's entry endpoint so the h-paths concatenate into one
// hamiltonian cycle of the result.  Returns the graph and the stitched cycle.
struct ChainResult {
    MultiGraph graph;
    CycleCertificate cycle;
};
ChainResult chain_copies(const MultiGraph& g, const CycleCertificate& h, int eu, int ev, int m);

}  // namespace hc
