#include "bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hc {

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt power(const BigInt& base, long e) {
    BigInt r = 1, b = base;
    long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

char compare(const BigInt& a, const BigInt& b) { return a < b ? '<' : (a > b ? '>' : '='); }

}  // namespace

BigInt construction_count(int d, int k) {
    if (d < 5 || k < 0) throw std::invalid_argument("construction_count needs d >= 5, k >= 0");
    return 2 * power(factorial(d - 1), d - 2) * power(factorial(d - 2), k);
}

ExactComparison conjecture_bound_compare(int d, int k) {
    if (d < 5) throw std::invalid_argument("conjectured bound is stated for d >= 5");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    long n = long(d) * d + d - 4 + long(d + 1) * k;
    ExactComparison cmp;
    cmp.left = power(construction_count(d, k), d + 1);
    cmp.right = power(BigInt(d - 1), 2 * (d + 1)) * power(factorial(d - 2), n);
    cmp.verdict = compare(cmp.left, cmp.right);
    return cmp;
}

bool theorem2_inequality(int d) {
    if (d < 5) throw std::invalid_argument("inequality is stated for d >= 5");
    BigInt lhs_base = 2 * power(BigInt(d - 1), d - 4);
    BigInt rhs_base = factorial(d - 2);
    // bit-length bounds decide all large d without computing the powers:
    // bits(x^e) in [e*(bits(x)-1)+1, e*bits(x)]
    unsigned long lb = msb(lhs_base) + 1, rb = msb(rhs_base) + 1;
    unsigned long lhs_hi = (unsigned long)(d + 1) * lb;
    unsigned long rhs_lo = (unsigned long)(2 * d - 2) * (rb - 1) + 1;
    if (lhs_hi < rhs_lo) return true;
    unsigned long lhs_lo = (unsigned long)(d + 1) * (lb - 1) + 1;
    unsigned long rhs_hi = (unsigned long)(2 * d - 2) * rb;
    if (rhs_hi < lhs_lo) return false;
    return power(lhs_base, d + 1) < power(rhs_base, 2 * d - 2);
}

bool theorem2_inequality_naive(int d) {
    BigInt lhs = 1, rhs = 1;
    BigInt lhs_base = 2 * power(BigInt(d - 1), d - 4);
    BigInt rhs_base = factorial(d - 2);
    for (int i = 0; i < d + 1; ++i) lhs *= lhs_base;
    for (int i = 0; i < 2 * d - 2; ++i) rhs *= rhs_base;
    return lhs < rhs;
}

bool corollary_identity_check(int d, int k_max) {
    for (int k = 0; k <= k_max; ++k) {
        BigInt lhs = construction_count(d, k);
        BigInt rhs;
        switch (d) {
            case 5:
                rhs = power(BigInt(2), k + 10) * power(BigInt(3), k + 3);
                break;
            case 6:
                rhs = power(BigInt(2), 3 * (k + 4) + 1) * power(BigInt(3), k + 4) * power(BigInt(5), 4);
                break;
            case 7:
                rhs = power(BigInt(2), 3 * (k + 7)) * power(BigInt(3), k + 10) * power(BigInt(5), k + 5);
                break;
            default:
                throw std::invalid_argument("factored forms are stated for d in {5,6,7}");
        }
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

constexpr mpfr_prec_t kPrecLadder[] = {96, 192, 384, 768, 1536};

struct SideValues {
    Interval lhs, rhs;
};

LLLCertificate certify(const std::function<SideValues(mpfr_prec_t)>& eval, bool want_greater) {
    for (mpfr_prec_t prec : kPrecLadder) {
        SideValues v = eval(prec);
        bool greater = v.lhs.certainly_greater(v.rhs);
        bool less = v.lhs.certainly_less(v.rhs);
        if (greater || less) {
            LLLCertificate c;
            c.holds = want_greater ? greater : less;
            c.lhs = v.lhs.to_string();
            c.rhs = v.rhs.to_string();
            c.precision_bits = int(prec);
            return c;
        }
    }
    throw std::runtime_error("interval comparison indeterminate after max refinement");
}

Interval one_minus(const Interval& x, mpfr_prec_t prec) {
    return Interval::from_long(1, prec).sub(x);
}

}  // namespace

LLLCertificate lll_condition(long d, const std::string& eps) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    auto eval = [&](mpfr_prec_t prec) {
        Interval dd = Interval::from_long(d, prec);
        Interval four = Interval::from_long(4, prec);
        Interval eight = Interval::from_long(8, prec);
        Interval one = Interval::from_long(1, prec);
        Interval denom = four.mul(dd.sqrt()).mul(eight.mul(dd).mul(dd).log()).add(one);
        Interval lhs = dd.div(denom);
        Interval rhs = one.div(Interval::from_decimal(eps, prec));
        return SideValues{lhs, rhs};
    };
    return certify(eval, /*want_greater=*/true);
}

LLLMinD lll_min_d0(const std::string& eps, long scan_limit) {
    LLLMinD out;
    for (long d = 1; d <= scan_limit; ++d) {
        LLLCertificate c = lll_condition(d, eps);
        if (c.holds) {
            out.d = d;
            out.at_d = c;
            if (d > 1) {
                out.below = lll_condition(d - 1, eps);
                if (out.below.holds)
                    throw validation_error("lll_min_d0: certificate below the minimum unexpectedly holds");
            }
            return out;
        }
    }
    throw std::runtime_error("lll_min_d0: no satisfying degree up to the scan limit");
}

LLLParamCheck lll_verify_parameters(long d, const std::string& eps) {
    if (d < 3) throw std::invalid_argument("parameter check needs d >= 3");
    LLLParamCheck out;

    auto edge = [&](mpfr_prec_t prec) {
        Interval dd = Interval::from_long(d, prec);
        Interval x = Interval::from_long(1, prec).div(Interval::from_long(4 * d, prec));
        Interval y = Interval::from_long(1, prec).div(Interval::from_long(2 * d * d, prec));
        Interval p = Interval::from_long(1, prec).div(Interval::from_long(4, prec).mul(dd.sqrt()));
        Interval lhs = p.mul(p);
        Interval rhs = x.mul(one_minus(x, prec).pow_int(2)).mul(one_minus(y, prec).pow_int(2 * d - 2));
        return SideValues{lhs, rhs};
    };
    out.edge_inequality = certify(edge, /*want_greater=*/false);

    auto vertex = [&](mpfr_prec_t prec) {
        Interval dd = Interval::from_long(d, prec);
        Interval x = Interval::from_long(1, prec).div(Interval::from_long(4 * d, prec));
        Interval y = Interval::from_long(1, prec).div(Interval::from_long(2 * d * d, prec));
        Interval p = Interval::from_long(1, prec).div(Interval::from_long(4, prec).mul(dd.sqrt()));
        Interval e = Interval::from_decimal(eps, prec);
        // (1-p)^(d*eps - 1) = exp((d*eps - 1) * log(1-p))
        Interval expo = dd.mul(e).sub(Interval::from_long(1, prec));
        Interval lhs = expo.mul(one_minus(p, prec).log()).exp();
        Interval rhs = y.mul(one_minus(x, prec).pow_int(2 * d - 2))
                           .mul(one_minus(y, prec).pow_int((long)(d - 2) * (d - 2)));
        return SideValues{lhs, rhs};
    };
    out.vertex_inequality = certify(vertex, /*want_greater=*/false);
    return out;
}

}  // namespace hc
