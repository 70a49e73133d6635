#include "doctest.h"
#include "bounds.hpp"

using namespace hc;

TEST_CASE("construction counts and the conjectured floor") {
    CHECK(construction_count(5, 0) == 27648);
    CHECK(construction_count(6, 0) == BigInt("414720000"));

    auto cmp = conjecture_bound_compare(5, 0);
    CHECK(cmp.verdict == '<');
    auto cmp2 = conjecture_bound_compare(7, 3);
    CHECK(cmp2.verdict == '<');
    CHECK_THROWS_AS(conjecture_bound_compare(4, 0), std::invalid_argument);

    for (int d = 5; d <= 9; ++d)
        for (int k = 0; k <= 3; ++k) CHECK(conjecture_bound_compare(d, k).verdict == '<');
}

TEST_CASE("degree-gap inequality, exact and against the naive oracle") {
    // d = 5 by hand: 8^6 = 262144 < 6^8 = 1679616
    CHECK(theorem2_inequality(5));
    BigInt lhs = 1, rhs = 1;
    for (int i = 0; i < 6; ++i) lhs *= 8;
    for (int i = 0; i < 8; ++i) rhs *= 6;
    CHECK(lhs == 262144);
    CHECK(rhs == 1679616);

    for (int d = 5; d <= 40; ++d) CHECK(theorem2_inequality(d) == theorem2_inequality_naive(d));
    for (int d = 5; d <= 200; ++d) CHECK(theorem2_inequality(d));
}

TEST_CASE("factored closed forms for d in 5..7") {
    CHECK(corollary_identity_check(5, 50));
    CHECK(corollary_identity_check(6, 50));
    CHECK(corollary_identity_check(7, 50));
    CHECK_THROWS_AS(corollary_identity_check(8, 1), std::invalid_argument);
}

TEST_CASE("local-lemma degree condition") {
    CHECK_FALSE(lll_condition(100, "1").holds);
    CHECK(lll_condition(10000, "1").holds);

    auto min1 = lll_min_d0("1");
    CHECK(min1.d > 100);
    CHECK(min1.at_d.holds);
    CHECK_FALSE(min1.below.holds);
    CHECK_FALSE(lll_condition(min1.d - 1, "1").holds);

    // eventually true for smaller eps too; 0.1 needs degrees in the millions,
    // so it gets a certified endpoint instead of a full scan
    auto m05 = lll_min_d0("0.5");
    CHECK(m05.at_d.holds);
    CHECK_FALSE(m05.below.holds);
    CHECK(lll_condition(3000000, "0.1").holds);
    CHECK_FALSE(lll_condition(1000000, "0.1").holds);
}

TEST_CASE("local-lemma parameter inequalities") {
    auto d5 = lll_verify_parameters(5, "1");
    CHECK(d5.edge_inequality.holds);  // p^2 < x(1-x)^2(1-y)^(2d-2) already at d=5

    auto d5weak = lll_verify_parameters(5, "0.1");
    CHECK_FALSE(d5weak.vertex_inequality.holds);

    auto min1 = lll_min_d0("1");
    for (long d : {min1.d, min1.d + 57, 4 * min1.d}) {
        auto chk = lll_verify_parameters(d, "1");
        CHECK(chk.both());
    }
    auto min05 = lll_min_d0("0.5");
    auto chk = lll_verify_parameters(min05.d, "0.5");
    CHECK(chk.both());
}
