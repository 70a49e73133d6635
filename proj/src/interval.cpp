#include "interval.hpp"

#include <stdexcept>

namespace hc {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_nan_p(r.lo_))
        throw std::invalid_argument("bad decimal literal: " + s);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

Interval Interval::add(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sub(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::neg() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

namespace {
// directed product of two endpoints
void dir_mul(mpfr_t out, const mpfr_t a, const mpfr_t b, mpfr_rnd_t rnd) {
    mpfr_mul(out, a, b, rnd);
}
}  // namespace

Interval Interval::mul(const Interval& o) const {
    // min/max over the four endpoint products with outward rounding
    Interval r(prec_);
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, prec_);
    dir_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    dir_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    dir_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    dir_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i)
        if (mpfr_cmp(c[i], r.lo_) < 0) mpfr_set(r.lo_, c[i], MPFR_RNDD);
    dir_mul(c[0], lo_, o.lo_, MPFR_RNDU);
    dir_mul(c[1], lo_, o.hi_, MPFR_RNDU);
    dir_mul(c[2], hi_, o.lo_, MPFR_RNDU);
    dir_mul(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i)
        if (mpfr_cmp(c[i], r.hi_) > 0) mpfr_set(r.hi_, c[i], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

Interval Interval::div(const Interval& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw std::domain_error("interval division by an interval containing zero");
    Interval inv(prec_);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return mul(inv);
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of a negative interval");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval log needs a positive interval");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(long e) const {
    if (e == 0) return from_long(1, prec_);
    if (e < 0) return from_long(1, prec_).div(pow_int(-e));
    // positive base expected by every caller here
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval pow_int on a mixed-sign interval");
    Interval r(prec_);
    mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Interval::certainly_greater(const Interval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
bool Interval::contains_zero_or_negative() const { return mpfr_sgn(lo_) <= 0; }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::to_string() const {
    char* lo = nullptr;
    char* hi = nullptr;
    mpfr_asprintf(&lo, "%.10Rg", lo_);
    mpfr_asprintf(&hi, "%.10Rg", hi_);
    std::string s = std::string("[") + lo + ", " + hi + "]";
    mpfr_free_str(lo);
    mpfr_free_str(hi);
    return s;
}

}  // namespace hc
