#include "doctest.h"
#include "surgery.hpp"
#include "families.hpp"
#include "canonical.hpp"
#include "oracles.hpp"

using namespace hc;

static MultiGraph k4_minus_edge() {
    // terminals 0,1 are the removed edge's endpoints
    return from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("gluing terminal graphs") {
    TerminalGraph p4a{path_graph(4), 0, 3};
    TerminalGraph p4b{path_graph(4), 0, 3};
    auto c6 = glue_at_terminals(p4a, p4b);
    CHECK(c6.n() == 6);
    CHECK(isomorphic(c6, cycle_graph(6)));
    CHECK(count_ham_cycles(c6).value == 1);

    TerminalGraph a{k4_minus_edge(), 0, 1}, b{k4_minus_edge(), 0, 1};
    CHECK(count_ham_st_paths(a.graph, 0, 1).value == 2);
    auto glued = glue_at_terminals(a, b);
    CHECK(glued.n() == 6);
    CHECK(count_ham_cycles(glued).value == 4);  // 2 * 2

    // both pieces carrying the terminal edge once gives a doubled edge (allowed)
    TerminalGraph tri1{complete_graph(3), 0, 1}, tri2{complete_graph(3), 0, 1};
    auto two_tri = glue_at_terminals(tri1, tri2);
    CHECK(two_tri.multiplicity(0, 1) == 2);
    // a doubled copy on either side overflows
    MultiGraph dbl(3);
    dbl.add_edge(0, 1, 2);
    dbl.add_edge(0, 2);
    dbl.add_edge(1, 2);
    CHECK_THROWS_AS(glue_at_terminals(TerminalGraph{dbl, 0, 1}, tri2), std::invalid_argument);
}

TEST_CASE("two-cut product counting") {
    auto c6 = cycle_graph(6);
    auto r = count_via_2cut(c6, 0, 3);
    CHECK(r.value == 1);
    CHECK(r.algo == Algo::two_cut_product);

    TerminalGraph a{k4_minus_edge(), 0, 1}, b{k4_minus_edge(), 0, 1};
    auto glued = glue_at_terminals(a, b);
    CHECK(count_via_2cut(glued, 0, 1).value == count_ham_cycles(glued).value);

    CHECK_THROWS_AS(count_via_2cut(complete_graph(5), 0, 1), std::invalid_argument);

    // every connected order-6 graph with a 2-cut: product equals direct count
    for (const auto& g : oracle::all_graphs(6, true)) {
        bool done = false;
        for (int u = 0; u < 6 && !done; ++u)
            for (int v = u + 1; v < 6 && !done; ++v) {
                try {
                    auto prod = count_via_2cut(g, u, v);
                    CHECK(prod.value == count_ham_cycles(g, Algo::backtrack).value);
                    done = true;
                } catch (const std::invalid_argument&) {
                }
            }
    }
}

TEST_CASE("observation-1 identity on sampled terminal pairs") {
    std::mt19937_64 rng(4242);
    int checked = 0;
    while (checked < 12) {
        auto g = oracle::random_connected_graph(5, 0.6, rng);
        auto h = oracle::random_connected_graph(5, 0.6, rng);
        TerminalGraph a{g, 0, 1}, b{h, 0, 1};
        MultiGraph glued;
        try {
            glued = glue_at_terminals(a, b);
        } catch (const std::invalid_argument&) {
            continue;
        }
        BigInt pa = count_ham_st_paths(g, 0, 1).value;
        BigInt pb = count_ham_st_paths(h, 0, 1).value;
        CHECK(count_ham_cycles(glued, Algo::backtrack).value == pa * pb);
        ++checked;
    }
}

TEST_CASE("dagger on the doubled triangle") {
    auto dt = oracle::doubled_triangle();  // vertex 2 has degree 2
    auto g11 = dagger(dt, 2, 0, 1, 0);
    CHECK(g11.n() == 11);
    CHECK(g11.simple());
    CHECK(degree_profile(g11).is_kl_regular(3, 4));
    CHECK(count_ham_cycles(g11).value == 2);
    CHECK(vertex_connectivity(g11) == 3);

    // the other parallel copy works the same way
    auto g11b = dagger(dt, 2, 0, 1, 1);
    CHECK(isomorphic(g11, g11b));

    // an edge on both cycles (the shared edge 1-2) is rejected
    CHECK_THROWS_AS(dagger(dt, 2, 0, 2, 0), std::invalid_argument);
    // x must be the even-degree vertex
    CHECK_THROWS_AS(dagger(dt, 0, 1, 2, 0), std::invalid_argument);

    // iterating the operation: 19 vertices, degrees 3 and 6, two cycles
    auto g19 = dagger_auto(g11);
    CHECK(g19.n() == 19);
    CHECK(degree_profile(g19).is_kl_regular(3, 6));
    CHECK(count_ham_cycles(g19).value == 2);
}

TEST_CASE("double rewire to a uniquely hamiltonian graph") {
    auto g11 = dagger(oracle::doubled_triangle(), 2, 0, 1, 0);
    auto g20 = double_rewire(g11);
    CHECK(g20.n() == 20);
    CHECK(degree_profile(g20).is_kl_regular(3, 4));
    CHECK(is_uniquely_hamiltonian(g20));

    CHECK_THROWS_AS(double_rewire(complete_graph(4)), std::invalid_argument);  // 3 cycles

    // doubled C5 has two cycles but no cubic vertex with simple edges
    MultiGraph c5d = cycle_graph(5);
    c5d.add_edge(0, 1);  // doubles one edge
    CHECK(count_ham_cycles(c5d).value == 2);
    CHECK_THROWS_AS(double_rewire(c5d, 2), std::invalid_argument);  // vertex of degree 2
    CHECK_THROWS_AS(double_rewire(c5d), std::invalid_argument);
}

TEST_CASE("triangle expansion") {
    auto g6 = expand_triangle(complete_graph(4), 0);
    CHECK(g6.n() == 6);
    CHECK(degree_profile(g6).is_k_regular(3));
    CHECK(isomorphic(g6, oracle::prism()));
    CHECK(count_ham_cycles(g6).value == 3);

    auto g8 = expand_triangle(g6, 1);
    CHECK(g8.n() == 8);
    CHECK(degree_profile(g8).is_k_regular(3));
    CHECK(count_ham_cycles(g8).value == 3);

    CHECK_THROWS_AS(expand_triangle(cycle_graph(4), 0), std::invalid_argument);
}

TEST_CASE("cycle-edge subdivision") {
    auto k4 = complete_graph(4);
    auto h = enumerate_ham_cycles(k4).front();

    auto full = subdivide_cycle_edges(k4, h, false);
    CHECK(full.n() == 8);
    CHECK(degree_profile(full).is_kl_regular(2, 3));
    CHECK(is_uniquely_hamiltonian(full));

    auto partial = subdivide_cycle_edges(k4, h, true);
    CHECK(partial.n() == 7);
    CHECK(is_uniquely_hamiltonian(partial));

    auto foreign = enumerate_ham_cycles(cycle_graph(4)).front();
    CHECK_THROWS_AS(subdivide_cycle_edges(complete_graph(5), foreign, false), std::invalid_argument);
}

TEST_CASE("chaining copies into a ring") {
    auto k4 = complete_graph(4);
    auto h = enumerate_ham_cycles(k4).front();
    int eu = h.verts[0], ev = h.verts[1];
    auto [ring, cycle] = chain_copies(k4, h, eu, ev, 2);
    CHECK(ring.n() == 8);
    CHECK(degree_profile(ring).is_k_regular(3));
    CHECK(certificate_valid(ring, cycle));
    CHECK(is_hamiltonian(ring));

    CHECK_THROWS_AS(chain_copies(k4, h, eu, ev, 1), std::invalid_argument);
    CHECK_THROWS_AS(chain_copies(k4, h, 0, 0, 2), std::invalid_argument);
}

TEST_CASE("petersen and its gadget") {
    auto p = petersen();
    CHECK(p.n() == 10);
    CHECK(degree_profile(p).is_k_regular(3));
    CHECK(count_ham_cycles(p).value == 0);
    // girth 5: no common neighbor across an edge, no pair with 2 common neighbors
    for (auto [u, v] : p.edges()) CHECK((p.neighbors(u) & p.neighbors(v)) == 0);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (!p.adjacent(u, v))
                CHECK(__builtin_popcountll(p.neighbors(u) & p.neighbors(v)) <= 1);

    auto gad = petersen_gadget();
    CHECK(gad.graph.n() == 9);
    CHECK(count_ham_st_paths(gad.graph, gad.vp, gad.wp).value == 0);
    // removing one role vertex leaves exactly two paths between the others
    std::vector<int> ids;
    MultiGraph minus = induced_subgraph(gad.graph, gad.graph.vertex_mask() & ~(uint64_t(1) << gad.vp), &ids);
    int a = int(std::find(ids.begin(), ids.end(), gad.wp) - ids.begin());
    int b = int(std::find(ids.begin(), ids.end(), gad.xp) - ids.begin());
    CHECK(count_ham_st_paths(minus, a, b).value == 2);
}

TEST_CASE("fig1 family, d = 5") {
    auto g = fig1_graph(5);
    auto L = fig1_layout(5);
    CHECK(g.n() == 26);
    CHECK(degree_profile(g).is_k_regular(5));
    CHECK(vertex_connectivity(g) == 2);

    CHECK_THROWS_AS(fig1_graph(4), std::invalid_argument);

    // direct enumeration and the 2-cut product agree with 2*(4!)^3
    BigInt expect = 27648;
    CHECK(count_ham_cycles(g, Algo::backtrack).value == expect);
    CHECK(count_via_2cut(g, L.v, L.squares[0]).value == expect);

    // the count is independent of the free square/disk wiring
    std::vector<int> swapped = {2, 1};
    auto g2 = fig1_graph(5, &swapped);
    CHECK(degree_profile(g2).is_k_regular(5));
    CHECK(count_ham_cycles(g2, Algo::backtrack).value == expect);
}

TEST_CASE("fig10 embedded graphs") {
    auto gs = fig10_graphs();
    REQUIRE(gs.size() == 5);
    for (const auto& g : gs) {
        CHECK(g.n() == 18);
        CHECK(degree_profile(g).is_kl_regular(3, 4));
        CHECK(is_connected(g));
    }
    auto prof = degree_profile(gs[0]);
    CHECK(prof.histogram.at(3) == 14);
    CHECK(prof.histogram.at(4) == 4);
    CHECK(gs[0].edge_count() == 29);
}
