#pragma once

#include <vector>

#include "multigraph.hpp"

namespace hc {

MultiGraph petersen();

// Petersen minus one vertex, with the three degree-2 neighbor roles exposed.
struct PetersenGadget {
    MultiGraph graph;  // 9 vertices
    int vp, wp, xp;    // the removed vertex's neighbors, in label order
};
PetersenGadget petersen_gadget();

// The d-regular counterexample family on d^2+d-4 vertices: a chain of d-2
// complete-minus-an-edge blocks interleaved with d-3 connector squares,
// closed through two hubs v, w that fan onto a path of d-1 disks.  Every
// hamiltonian cycle traverses each block end to end ((d-1)! ways) and closes
// through the disk path (2 ways), so the count is exactly 2*((d-1)!)^(d-2).
//
// `omit` optionally overrides which interior disk each square skips (a
// permutation of 1..d-3); the default is square i -> disk i+1.  Regularity,
// order, and the two-path hub/disk gadget are validated on every call.
MultiGraph fig1_graph(int d, const std::vector<int>* omit = nullptr);

// Indices of fig1_graph's landmarks, for tests and the 2-cut decomposition.
struct Fig1Layout {
    int d = 0;
    int order = 0;
    std::vector<int> block_left, block_right;  // chain attachment endpoints
    std::vector<int> squares;
    std::vector<int> disks;
    int v = 0, w = 0;
};
Fig1Layout fig1_layout(int d);

// The five smallest uniquely hamiltonian graphs with degrees 3 and 4 only
// (order 18), as fixed embedded adjacency data.
std::vector<MultiGraph> fig10_graphs();

}  // namespace hc
