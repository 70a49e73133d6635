#include "doctest.h"
#include "multigraph.hpp"
#include "canonical.hpp"
#include "oracles.hpp"

#include <random>

using namespace hc;

TEST_CASE("multiplicity bookkeeping and invariants") {
    MultiGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.degree(0) == 2);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);  // would be multiplicity 3
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);  // loop
    g.remove_edge_copy(0, 1);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("degree profiles") {
    auto p_k4 = degree_profile(complete_graph(4));
    CHECK(p_k4.histogram.at(3) == 4);
    CHECK(p_k4.is_k_regular(3));
    CHECK_FALSE(p_k4.is_k_regular(4));

    auto star = from_edge_list(4, {{3, 0}, {3, 1}, {3, 2}});
    auto p_star = degree_profile(star);
    CHECK(p_star.histogram.at(1) == 3);
    CHECK(p_star.histogram.at(3) == 1);
    CHECK(p_star.is_kl_regular(3, 1));
    CHECK(p_star.is_kl_regular(1, 3));
    CHECK_FALSE(p_star.is_k_regular(3));

    // parity: degree sum even for anything constructible
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_connected_graph(6, 0.4, rng);
        int sum = 0;
        for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
        CHECK(sum % 2 == 0);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("complement") {
    auto c5 = cycle_graph(5);
    CHECK(isomorphic(complement(c5), c5));  // self-complementary
    auto k4c = complement(complete_graph(4));
    CHECK(k4c.edge_count() == 0);
    CHECK(isomorphic(complement(k4c), complete_graph(4)));

    auto pc = complement(oracle::petersen_standard());
    CHECK(degree_profile(pc).is_k_regular(6));

    MultiGraph multi(3);
    multi.add_edge(0, 1, 2);
    CHECK_THROWS_AS(complement(multi), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_connected_graph(7, 0.5, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(5)) == 4);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(oracle::petersen_standard()) == 3);
    CHECK(vertex_connectivity(path_graph(5)) == 1);
    CHECK(vertex_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK(vertex_connectivity(complete_graph(2)) == 1);

    MultiGraph disconnected(5);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK(vertex_connectivity(disconnected) == 0);

    // kappa <= min degree
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_connected_graph(8, 0.5, rng);
        int mindeg = g.n();
        for (int v = 0; v < g.n(); ++v) mindeg = std::min(mindeg, g.degree(v));
        CHECK(vertex_connectivity(g) <= mindeg);
    }
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(complete_bipartite(3, 4)));
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK_FALSE(is_bipartite(oracle::petersen_standard()));
}

TEST_CASE("canonical form equals iff isomorphic") {
    auto c5 = cycle_graph(5);
    auto c5b = from_edge_list(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});  // relabeled C5
    CHECK(canonical_form(c5) == canonical_form(c5b));
    CHECK(canonical_form(cycle_graph(6)) != canonical_form(complete_bipartite(3, 3)));

    CHECK(canonical_form(oracle::petersen_standard()) == canonical_form(oracle::petersen_kneser()));

    // random relabelings never change the form; distinct small graphs split
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_connected_graph(9, 0.35, rng);
        CHECK(canonical_form(g) == canonical_form(oracle::random_relabeling(g, rng)));
    }

    // multiplicities matter
    auto dt = oracle::doubled_triangle();
    CHECK(canonical_form(dt) != canonical_form(cycle_graph(3)));
    CHECK(canonical_form(dt) == canonical_form(oracle::random_relabeling(dt, rng)));
}

TEST_CASE("canonical form agrees with brute force on all graphs of order 5") {
    auto graphs = oracle::all_graphs(5, false);
    CHECK(graphs.size() == 34);  // known count of graphs on 5 vertices
    for (const auto& g : graphs) {
        auto c = canonical_form(g);
        CHECK(c == canonical_form_exhaustive(g));
        std::mt19937_64 rng(99);
        for (int t = 0; t < 5; ++t)
            CHECK(canonical_form(oracle::random_relabeling(g, rng)) == c);
    }
}

TEST_CASE("refinement search classifies like the exhaustive oracle") {
    // the two forms are different strings but must induce the same
    // isomorphism classes; 156 is the known number of graphs on 6 vertices
    CHECK(oracle::all_graphs(6, false).size() == 156);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coin(0, 1);
    auto random_multigraph = [&](int n) {
        MultiGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double x = coin(rng);
                if (x < 0.3) g.add_edge(u, v);
                else if (x < 0.4) g.add_edge(u, v, 2);
            }
        return g;
    };
    for (int trial = 0; trial < 80; ++trial) {
        int n = 6 + int(rng() % 2);
        auto a = random_multigraph(n);
        auto b = (trial % 2 == 0) ? oracle::random_relabeling(a, rng) : random_multigraph(n);
        bool same_fast = canonical_form(a) == canonical_form(b);
        bool same_slow = canonical_form_exhaustive(a) == canonical_form_exhaustive(b);
        CHECK(same_fast == same_slow);
    }
}

TEST_CASE("automorphisms") {
    CHECK(automorphisms(complete_graph(4)).size() == 24);
    CHECK(automorphisms(cycle_graph(5)).size() == 10);       // dihedral
    CHECK(automorphisms(oracle::petersen_standard()).size() == 120);
    CHECK(automorphisms(path_graph(3)).size() == 2);
}

TEST_CASE("induced subgraph and permutation") {
    auto g = oracle::petersen_standard();
    std::vector<int> ids;
    auto sub = induced_subgraph(g, 0b11111, &ids);  // outer cycle
    CHECK(sub.n() == 5);
    CHECK(isomorphic(sub, cycle_graph(5)));
    CHECK(ids == std::vector<int>{0, 1, 2, 3, 4});
}
