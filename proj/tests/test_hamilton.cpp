#include "doctest.h"
#include "hamilton.hpp"
#include "canonical.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace hc;

static BigInt cycles(const MultiGraph& g, Algo a) { return count_ham_cycles(g, a).value; }

TEST_CASE("cycle counts on named graphs") {
    for (Algo a : {Algo::backtrack, Algo::held_karp}) {
        CHECK(cycles(complete_graph(4), a) == 3);
        CHECK(cycles(complete_graph(5), a) == 12);
        CHECK(cycles(complete_graph(6), a) == 60);
        CHECK(cycles(cycle_graph(5), a) == 1);
        CHECK(cycles(oracle::petersen_standard(), a) == 0);
        CHECK(cycles(oracle::doubled_triangle(), a) == 2);
        CHECK(cycles(complete_bipartite(3, 3), a) == 6);
        CHECK(cycles(oracle::prism(), a) == 3);
    }
    // (n-1)!/2 for complete graphs 3..9
    BigInt fact = 1;
    for (int n = 3; n <= 9; ++n) {
        fact = 1;
        for (int i = 2; i < n; ++i) fact *= i;
        CHECK(cycles(complete_graph(n), Algo::backtrack) == fact / 2);
        CHECK(cycles(cycle_graph(n), Algo::backtrack) == 1);
    }
}

TEST_CASE("small-order conventions") {
    CHECK_THROWS_AS(count_ham_cycles(MultiGraph(0)), std::invalid_argument);
    CHECK(count_ham_cycles(MultiGraph(1)).value == 0);
    MultiGraph two(2);
    two.add_edge(0, 1);
    CHECK(count_ham_cycles(two).value == 0);
    two.add_edge(0, 1);
    CHECK(count_ham_cycles(two).value == 1);
}

TEST_CASE("s-t path counts") {
    auto p4 = path_graph(4);
    CHECK(count_ham_st_paths(p4, 0, 3).value == 1);
    CHECK(count_ham_st_paths(p4, 3, 0).value == 1);
    CHECK(count_ham_st_paths(p4, 0, 2).value == 0);
    CHECK(count_ham_st_paths(complete_graph(5), 1, 3).value == 6);  // (n-2)!
    CHECK_THROWS_AS(count_ham_st_paths(p4, 1, 1), std::invalid_argument);

    for (Algo a : {Algo::backtrack, Algo::held_karp}) {
        CHECK(count_ham_st_paths(complete_graph(6), 0, 5, a).value == 24);
        CHECK(count_ham_st_paths(oracle::doubled_triangle(), 1, 2, a).value == 2);
    }
}

TEST_CASE("dual-algorithm agreement and permutation oracle, exhaustive order <= 6") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& g : oracle::all_graphs(n, true)) {
            BigInt bt = cycles(g, Algo::backtrack);
            BigInt hk = cycles(g, Algo::held_karp);
            BigInt pm = oracle::cycles_by_permutations(g);
            CHECK(bt == hk);
            CHECK(bt == pm);
            BigInt p01 = count_ham_st_paths(g, 0, 1, Algo::backtrack).value;
            CHECK(p01 == count_ham_st_paths(g, 0, 1, Algo::held_karp).value);
            CHECK(p01 == oracle::st_paths_by_permutations(g, 0, 1));
        }
    }
}

TEST_CASE("random multigraphs against the permutation oracle") {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + int(rng() % 5);  // 3..7
        MultiGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double x = coin(rng);
                if (x < 0.35) g.add_edge(u, v);
                else if (x < 0.5) g.add_edge(u, v, 2);
            }
        BigInt bt = cycles(g, Algo::backtrack);
        CHECK(bt == oracle::cycles_by_permutations(g));
        CHECK(bt == cycles(g, Algo::held_karp));
        int s = int(rng() % n), t = (s + 1 + int(rng() % (n - 1))) % n;
        BigInt ps = count_ham_st_paths(g, s, t, Algo::backtrack).value;
        CHECK(ps == oracle::st_paths_by_permutations(g, s, t));
        CHECK(ps == count_ham_st_paths(g, s, t, Algo::held_karp).value);
    }
}

TEST_CASE("cycle/path identity: 2*cycles = sum of s-t paths over neighbors of s") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_connected_graph(4 + int(rng() % 5), 0.5, rng);
        int s = int(rng() % g.n());
        BigInt twice = 2 * cycles(g, Algo::backtrack);
        BigInt sum = 0;
        uint64_t nb = g.neighbors(s);
        while (nb) {
            int t = __builtin_ctzll(nb);
            nb &= nb - 1;
            sum += count_ham_st_paths(g, s, t, Algo::backtrack).value;
        }
        CHECK(twice == sum);
    }
}

TEST_CASE("relabeling invariance of counts") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_connected_graph(8, 0.45, rng);
        auto h = oracle::random_relabeling(g, rng);
        CHECK(cycles(g, Algo::backtrack) == cycles(h, Algo::backtrack));
        CHECK(cycles(g, Algo::held_karp) == cycles(h, Algo::held_karp));
    }
}

TEST_CASE("parallel first-level split is bit-identical") {
    std::mt19937_64 rng(808);
    HamiltonConfig serial, par;
    par.jobs = 8;
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_connected_graph(10, 0.5, rng);
        CHECK(count_ham_cycles(g, Algo::backtrack, serial).value ==
              count_ham_cycles(g, Algo::backtrack, par).value);
    }
}

TEST_CASE("enumeration yields distinct canonical certificates matching the count") {
    auto check_stream = [](const MultiGraph& g) {
        auto certs = enumerate_ham_cycles(g);
        CHECK(BigInt(certs.size()) == count_ham_cycles(g, Algo::backtrack).value);
        std::set<CycleCertificate> dedup(certs.begin(), certs.end());
        CHECK(dedup.size() == certs.size());
        for (const auto& c : certs) {
            CHECK(certificate_valid(g, c));
            CHECK(c.canonical() == c);
            CHECK(c.verts[0] == 0);
        }
    };
    check_stream(cycle_graph(5));
    check_stream(complete_graph(4));
    check_stream(complete_graph(6));
    check_stream(oracle::doubled_triangle());
    check_stream(complete_bipartite(3, 3));

    auto c5 = enumerate_ham_cycles(cycle_graph(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].verts == std::vector<int>{0, 1, 2, 3, 4});

    auto dt = enumerate_ham_cycles(oracle::doubled_triangle());
    REQUIRE(dt.size() == 2);
    CHECK(dt[0].verts == dt[1].verts);
    CHECK(dt[0].second_copy != dt[1].second_copy);

    // serialization round trip
    for (const auto& c : dt) CHECK(CycleCertificate::from_line(c.to_line()) == c);
}

TEST_CASE("uniquely hamiltonian and traceability predicates") {
    CHECK(is_uniquely_hamiltonian(cycle_graph(7)));
    CHECK_FALSE(is_uniquely_hamiltonian(complete_graph(4)));
    CHECK_FALSE(is_uniquely_hamiltonian(oracle::petersen_standard()));

    CHECK(all_nonadjacent_pairs_traceable(complete_graph(4)));  // vacuous
    CHECK_FALSE(all_nonadjacent_pairs_traceable(complete_bipartite(3, 3)));
    CHECK(all_nonadjacent_pairs_traceable(oracle::prism()));
}

TEST_CASE("limited counting stops early but stays exact below the limit") {
    CHECK(count_ham_cycles_limited(complete_graph(8), 5) == 5);
    CHECK(count_ham_cycles_limited(cycle_graph(9), 5) == 1);
    CHECK(count_ham_cycles_limited(oracle::petersen_standard(), 3) == 0);
    CHECK(count_ham_st_paths_limited(path_graph(5), 0, 4, 10) == 1);
}

TEST_CASE("held-karp cap honored") {
    HamiltonConfig small;
    small.hk_cap = 6;
    CHECK_THROWS_AS(count_ham_cycles(complete_graph(8), Algo::held_karp, small), cap_error);
}
