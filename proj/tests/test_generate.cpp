#include "doctest.h"
#include "generate.hpp"
#include "canonical.hpp"
#include "oracles.hpp"

#include <set>

using namespace hc;

static GenerationSpec regular(int k, int n, bool connected = true) {
    GenerationSpec s;
    s.kind = GenerationSpec::Kind::exactly_k;
    s.k = k;
    s.n = n;
    s.connected = connected;
    return s;
}

TEST_CASE("forced regular classes") {
    auto k4 = generate_graphs(regular(3, 4));
    REQUIRE(k4.size() == 1);
    CHECK(isomorphic(k4[0], complete_graph(4)));

    auto cubic6 = generate_graphs(regular(3, 6));
    REQUIRE(cubic6.size() == 2);  // K_{3,3} and the prism
    std::set<CanonicalForm> forms;
    for (const auto& g : cubic6) forms.insert(canonical_form(g));
    CHECK(forms.count(canonical_form(complete_bipartite(3, 3))));
    CHECK(forms.count(canonical_form(oracle::prism())));

    auto k5 = generate_graphs(regular(4, 5));
    REQUIRE(k5.size() == 1);
    CHECK(isomorphic(k5[0], complete_graph(5)));

    // parity-infeasible: odd k, odd n
    CHECK(generate_graphs(regular(3, 7)).empty());
}

TEST_CASE("known class sizes for regular graphs") {
    CHECK(generate_graphs(regular(3, 8)).size() == 5);
    CHECK(generate_graphs(regular(3, 10)).size() == 19);
    CHECK(generate_graphs(regular(4, 8)).size() == 6);
    CHECK(generate_graphs(regular(4, 9)).size() == 16);
    CHECK(generate_graphs(regular(5, 8)).size() == 3);      // via complement
    CHECK(generate_graphs(regular(6, 9)).size() == 4);      // complements of 2-regular
    CHECK(generate_graphs(regular(7, 8)).size() == 1);      // K8
    CHECK(generate_graphs(regular(6, 10)).size() == 21);
    CHECK(generate_graphs(regular(7, 10)).size() == 5);
    CHECK(generate_graphs(regular(2, 8, false)).size() == 3);  // C8, C3+C5, C4+C4
}

TEST_CASE("generator is exactly complete against the naive oracle, n <= 7") {
    for (int n = 4; n <= 7; ++n) {
        auto everything = oracle::all_graphs(n, true);
        for (int k = 2; k < n; ++k) {
            std::set<CanonicalForm> expect;
            for (const auto& g : everything)
                if (degree_profile(g).is_k_regular(k)) expect.insert(canonical_form(g));
            auto got = generate_graphs(regular(k, n));
            std::set<CanonicalForm> have;
            for (const auto& g : got) have.insert(canonical_form(g));
            CHECK(have == expect);
        }
        // a mixed class: degrees {2,3} and {3,4}
        for (auto [k, l] : {std::pair{3, 2}, std::pair{4, 3}}) {
            GenerationSpec s;
            s.kind = GenerationSpec::Kind::two_degrees;
            s.k = k;
            s.l = l;
            s.n = n;
            std::set<CanonicalForm> expect;
            for (const auto& g : everything)
                if (degree_profile(g).is_kl_regular(k, l)) expect.insert(canonical_form(g));
            std::set<CanonicalForm> have;
            for (const auto& g : generate_graphs(s)) have.insert(canonical_form(g));
            CHECK(have == expect);
        }
        // nearly-3-regular
        GenerationSpec s;
        s.kind = GenerationSpec::Kind::nearly_k;
        s.k = 3;
        s.n = n;
        std::set<CanonicalForm> expect;
        for (const auto& g : everything) {
            auto prof = degree_profile(g);
            int below = 0;
            bool ok = true;
            for (int d : prof.degrees) {
                if (d < 3) ++below;
                else if (d != 3) ok = false;
            }
            if (ok && below == 2) expect.insert(canonical_form(g));
        }
        std::set<CanonicalForm> have;
        for (const auto& g : generate_graphs(s)) have.insert(canonical_form(g));
        CHECK(have == expect);
    }
}

TEST_CASE("generated streams are duplicate-free and satisfy the spec predicate") {
    auto graphs = generate_graphs(regular(3, 10));
    std::set<CanonicalForm> seen;
    for (const auto& g : graphs) {
        CHECK(degree_profile(g).is_k_regular(3));
        CHECK(is_connected(g));
        CHECK(seen.insert(canonical_form(g)).second);
    }
    // bipartite-only filter
    GenerationSpec bip = regular(3, 8);
    bip.bipartite_only = true;
    for (const auto& g : generate_graphs(bip)) CHECK(is_bipartite(g));
}

TEST_CASE("generation cap refuses with an effort estimate") {
    GenerationLimits tight;
    tight.max_n = 9;
    CHECK_THROWS_AS(generate_graphs(regular(3, 10), tight), cap_error);
    tight.force = true;
    CHECK(generate_graphs(regular(3, 10), tight).size() == 19);
}

TEST_CASE("h_n(k) minima at the small end of the table") {
    auto r = compute_hn(4, std::nullopt, 5);
    CHECK_FALSE(r.infinite);
    CHECK(r.value == 12);
    CHECK(r.witnesses.size() == 1);

    auto r7 = compute_hn(4, std::nullopt, 7);
    CHECK(r7.value == 23);
    CHECK(r7.witnesses.size() == 1);

    auto k7 = compute_hn(7, std::nullopt, 8);
    CHECK(k7.value == 2520);
    CHECK(k7.witnesses.size() == 1);

    // odd-odd parity: no graphs at all
    CHECK(compute_hn(3, std::nullopt, 9).infinite);

    // semi-cubic case from the smallest-order analysis
    CHECK(compute_hn(3, 7, 8).value == 7);
}

TEST_CASE("h_n^2 via nearly-regular gluing") {
    CHECK(compute_hn2(4, 9).infinite);
    auto r = compute_hn2(4, 10);
    REQUIRE_FALSE(r.infinite);
    CHECK(r.value == 36);
    for (const auto& w : r.witnesses) {
        CHECK(degree_profile(w).is_k_regular(4));
        CHECK(vertex_connectivity(w) == 2);
        CHECK(count_ham_cycles(w).value == 36);
    }
}

TEST_CASE("every semi-cubic odd class member has at least three cycles") {
    // degrees {3, 5} on 6..8 vertices: odd degrees force >= 3 by parity
    for (int n : {6, 8}) {
        GenerationSpec s;
        s.kind = GenerationSpec::Kind::two_degrees;
        s.k = 5;
        s.l = 3;
        s.n = n;
        for (const auto& g : generate_graphs(s)) {
            BigInt c = count_ham_cycles(g).value;
            if (c != 0) CHECK(c >= 3);
        }
    }
}

TEST_CASE("random regular graphs have the right degrees") {
    std::mt19937_64 rng(99);
    for (auto [n, k] : {std::pair{8, 3}, std::pair{10, 4}, std::pair{9, 4}, std::pair{12, 5}}) {
        auto g = random_regular_graph(n, k, rng);
        CHECK(degree_profile(g).is_k_regular(k));
        CHECK(g.simple());
    }
}
