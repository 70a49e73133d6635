#pragma once

#include <mpfr.h>

#include <string>

namespace hc {

// Closed interval [lo, hi] with outward directed rounding at a given
// precision.  Just enough operations for the dependency-graph inequality
// checks: ratios, powers, sqrt, log, exp.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval& o);
    Interval& operator=(const Interval& o);
    ~Interval();

    static Interval from_long(long v, mpfr_prec_t prec = 128);
    // decimal strings like "0.1" land in a one-ulp-wide interval
    static Interval from_decimal(const std::string& s, mpfr_prec_t prec = 128);

    Interval add(const Interval& o) const;
    Interval sub(const Interval& o) const;
    Interval mul(const Interval& o) const;
    Interval div(const Interval& o) const;
    Interval sqrt() const;
    Interval log() const;   // natural logarithm
    Interval exp() const;
    Interval pow_int(long e) const;
    Interval neg() const;

    bool certainly_less(const Interval& o) const;     // hi < o.lo
    bool certainly_greater(const Interval& o) const;  // lo > o.hi
    bool contains_zero_or_negative() const;

    double lo_double() const;
    double hi_double() const;
    std::string to_string() const;

    mpfr_prec_t precision() const { return prec_; }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    friend Interval make_interval(mpfr_prec_t);
};

}  // namespace hc
