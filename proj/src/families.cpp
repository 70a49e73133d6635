#include "families.hpp"

#include <algorithm>
#include <numeric>

#include "hamilton.hpp"

namespace hc {

MultiGraph petersen() {
    MultiGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);      // outer cycle
        g.add_edge(i, i + 5);            // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

PetersenGadget petersen_gadget() {
    MultiGraph p = petersen();
    // remove vertex 0 (neighbors 1, 4, 5); survivors relabel to 0..8
    MultiGraph g(9);
    for (auto [a, b] : p.edges())
        if (a != 0 && b != 0) g.add_edge(a - 1, b - 1);
    return {g, 0, 3, 4};
}

Fig1Layout fig1_layout(int d) {
    if (d < 5) throw std::invalid_argument("fig1_graph needs degree d >= 5");
    Fig1Layout L;
    L.d = d;
    L.order = d * d + d - 4;
    if (L.order > kMaxVertices)
        throw cap_error("fig1_graph(" + std::to_string(d) + ") has order " +
                        std::to_string(L.order) + " above the vertex cap");
    int blocks = d - 2, block_size = d + 1;
    for (int i = 0; i < blocks; ++i) {
        L.block_left.push_back(i * block_size);
        L.block_right.push_back(i * block_size + 1);
    }
    int base = blocks * block_size;
    for (int i = 0; i < d - 3; ++i) L.squares.push_back(base + i);
    base += d - 3;
    for (int j = 0; j < d - 1; ++j) L.disks.push_back(base + j);
    L.v = L.order - 2;
    L.w = L.order - 1;
    return L;
}

MultiGraph fig1_graph(int d, const std::vector<int>* omit) {
    Fig1Layout L = fig1_layout(d);
    int blocks = d - 2, block_size = d + 1;

    std::vector<int> skip;  // square i skips interior disk skip[i]
    if (omit) {
        skip = *omit;
        std::vector<int> sorted = skip;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> interior(d - 3);
        std::iota(interior.begin(), interior.end(), 1);
        if (sorted != interior)
            throw std::invalid_argument("fig1_graph: omit must be a permutation of the interior disks");
    } else {
        skip.resize(d - 3);
        std::iota(skip.begin(), skip.end(), 1);
    }

    MultiGraph g(L.order);
    // complete blocks minus the chain edge
    for (int i = 0; i < blocks; ++i)
        for (int a = 0; a < block_size; ++a)
            for (int b = a + 1; b < block_size; ++b) {
                int x = i * block_size + a, y = i * block_size + b;
                if (x == L.block_left[i] && y == L.block_right[i]) continue;
                g.add_edge(x, y);
            }
    // chain v - B0 - S0 - B1 - ... - S_{d-4} - B_{d-3} - w
    g.add_edge(L.v, L.block_left[0]);
    for (int i = 0; i + 1 < blocks; ++i) {
        g.add_edge(L.block_right[i], L.squares[i]);
        g.add_edge(L.squares[i], L.block_left[i + 1]);
    }
    g.add_edge(L.block_right[blocks - 1], L.w);
    // disk path plus the v/w fans
    for (int j = 0; j + 1 < d - 1; ++j) g.add_edge(L.disks[j], L.disks[j + 1]);
    for (int j = 0; j < d - 1; ++j) {
        g.add_edge(L.v, L.disks[j]);
        g.add_edge(L.w, L.disks[j]);
    }
    // each square joins every disk except its skipped interior one
    for (int i = 0; i < d - 3; ++i)
        for (int j = 0; j < d - 1; ++j)
            if (j != skip[i]) g.add_edge(L.squares[i], L.disks[j]);

    if (!degree_profile(g).is_k_regular(d))
        throw validation_error("fig1_graph: construction is not " + std::to_string(d) + "-regular");
    if (!g.simple()) throw validation_error("fig1_graph: construction is not simple");

    // hub/disk gadget: exactly two hamiltonian v-w paths
    uint64_t gadget = (uint64_t(1) << L.v) | (uint64_t(1) << L.w);
    for (int j : L.disks) gadget |= uint64_t(1) << j;
    std::vector<int> ids;
    MultiGraph sub = induced_subgraph(g, gadget, &ids);
    int sv = int(std::find(ids.begin(), ids.end(), L.v) - ids.begin());
    int sw = int(std::find(ids.begin(), ids.end(), L.w) - ids.begin());
    if (sub.n() != d + 1) throw validation_error("fig1_graph: gadget order is off");
    if (count_ham_st_paths(sub, sv, sw).value != 2)
        throw validation_error("fig1_graph: hub/disk gadget does not have exactly two v-w paths");
    return g;
}

namespace {

MultiGraph order18(const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g = from_edge_list(18, edges);
    return g;
}

}  // namespace

std::vector<MultiGraph> fig10_graphs() {
    std::vector<MultiGraph> out;
    out.push_back(order18({{0, 1},  {0, 4},  {0, 17}, {1, 2},   {1, 14},  {2, 3},   {2, 16},
                           {3, 4},  {3, 5},  {4, 5},  {4, 15},  {5, 6},   {5, 10},  {6, 7},
                           {6, 13}, {7, 8},  {7, 11}, {8, 9},   {8, 17},  {9, 10},  {9, 13},
                           {10, 11}, {11, 12}, {12, 13}, {12, 14}, {13, 14}, {14, 15}, {15, 16},
                           {16, 17}}));
    out.push_back(order18({{0, 1},  {0, 5},  {0, 17}, {1, 2},   {1, 8},   {2, 3},   {2, 6},
                           {3, 4},  {3, 16}, {4, 5},  {4, 8},   {5, 6},   {6, 7},   {7, 8},
                           {7, 12}, {8, 9},  {9, 10}, {9, 14},  {10, 11}, {10, 17}, {11, 12},
                           {11, 15}, {12, 13}, {13, 14}, {13, 17}, {14, 15}, {15, 16}, {16, 17}}));
    out.push_back(order18({{0, 1},  {0, 5},  {0, 17}, {1, 2},   {1, 8},   {2, 3},   {2, 6},
                           {3, 4},  {3, 16}, {4, 5},  {4, 8},   {5, 6},   {6, 7},   {7, 8},
                           {7, 9},  {7, 12}, {8, 9},  {9, 10},  {9, 14},  {10, 11}, {10, 17},
                           {11, 12}, {11, 15}, {12, 13}, {13, 14}, {13, 17}, {14, 15}, {15, 16},
                           {16, 17}}));
    out.push_back(order18({{0, 1},  {0, 5},  {0, 17}, {1, 2},   {1, 8},   {2, 3},   {2, 6},
                           {3, 4},  {3, 16}, {4, 5},  {4, 8},   {5, 6},   {6, 7},   {7, 8},
                           {7, 12}, {7, 16}, {8, 9},  {9, 10},  {9, 14},  {10, 11}, {10, 17},
                           {11, 12}, {11, 15}, {12, 13}, {13, 14}, {13, 17}, {14, 15}, {15, 16},
                           {16, 17}}));
    out.push_back(order18({{0, 1},  {0, 14}, {0, 17}, {1, 2},   {1, 3},   {2, 3},   {2, 13},
                           {2, 16}, {3, 4},  {3, 15}, {4, 5},   {4, 11},  {5, 6},   {5, 9},
                           {6, 7},  {6, 12}, {7, 8},  {7, 11},  {8, 9},   {8, 17},  {9, 10},
                           {10, 11}, {10, 12}, {11, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16},
                           {16, 17}}));
    return out;
}

}  // namespace hc
