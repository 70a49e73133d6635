#pragma once

#include <string>

#include "hamilton.hpp"
#include "interval.hpp"

namespace hc {

// Rational exponents cleared by raising both sides to integer powers, so
// every verdict is an exact integer fact.
struct ExactComparison {
    BigInt left, right;  // after clearing exponents
    char verdict = '?';  // '<', '=', '>'
};

// Construction count 2[(d-1)!]^(d-2) [(d-2)!]^k versus the conjectured floor
// (d-1)^2 [(d-2)!]^(n/(d+1)) at n = d^2+d-4+(d+1)k, both raised to the
// (d+1)-th power.  d >= 5.
ExactComparison conjecture_bound_compare(int d, int k);

// 2(d-1)^(d-4) < [(d-2)!]^(2-4/(d+1)), checked as
// [2(d-1)^(d-4)]^(d+1) < [(d-2)!]^(2d-2).
bool theorem2_inequality(int d);

// Same comparison via plain repeated multiplication, for the test oracle.
bool theorem2_inequality_naive(int d);

// The factored per-degree counts versus the closed form, for d in {5,6,7}
// and all 0 <= k <= k_max.
bool corollary_identity_check(int d, int k_max);

// The closed-form construction count 2[(d-1)!]^(d-2) [(d-2)!]^k.
BigInt construction_count(int d, int k);

// --- Local-lemma parameter checks (interval-certified) ---

struct LLLCertificate {
    bool holds = false;
    std::string lhs, rhs;  // certifying interval bounds
    int precision_bits = 0;
};

// d / (4 sqrt(d) log(8 d^2) + 1) > 1/eps, natural logarithm, eps a decimal
// string.  Refines precision until decisive.
LLLCertificate lll_condition(long d, const std::string& eps);

// least d with lll_condition(d) true by upward scan; also certifies that
// d-1 fails.
struct LLLMinD {
    long d = 0;
    LLLCertificate at_d, below;
};
LLLMinD lll_min_d0(const std::string& eps, long scan_limit = 200000);

// the two dependency-graph inequalities with x = 1/4d, y = 1/2d^2,
// p = 1/(4 sqrt d):
//   (edge)    p^2 < x (1-x)^2 (1-y)^(2d-2)
//   (vertex)  (1-p)^(d*eps-1) < y (1-x)^(2d-2) (1-y)^((d-2)^2)
struct LLLParamCheck {
    LLLCertificate edge_inequality, vertex_inequality;
    bool both() const { return edge_inequality.holds && vertex_inequality.holds; }
};
LLLParamCheck lll_verify_parameters(long d, const std::string& eps);

}  // namespace hc
