// bigfloat.hpp
// Minimal RAII wrapper over an MPFR floating-point number, just wide enough
// to re-run ErrVal predicate evaluations at escalated precision.  All MPFR
// operations round to nearest, so each is correctly rounded to <= 0.5 ulp;
// scalar_model<bigfloat> budgets a full 2 ulp per operation.

#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <utility>

#include "thetaseq/errval.hpp"

namespace thetaseq {

class bigfloat {
public:
    static constexpr mpfr_prec_t default_prec = 256;

    explicit bigfloat(mpfr_prec_t prec = default_prec) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    bigfloat(const bigfloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    bigfloat(bigfloat&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    bigfloat& operator=(const bigfloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    bigfloat& operator=(bigfloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~bigfloat() { mpfr_clear(x_); }

    static bigfloat from_double(double v, mpfr_prec_t prec = default_prec) {
        bigfloat r(prec);
        mpfr_set_d(r.x_, v, MPFR_RNDN);  // doubles convert exactly
        return r;
    }
    static bigfloat from_uint(std::uint64_t v, mpfr_prec_t prec = default_prec) {
        bigfloat r(prec);
        mpfr_set_uj(r.x_, v, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }

    // absolute size of one ulp at this value/precision, as a double
    double ulp() const {
        if (is_zero()) return 0.0;
        long e = static_cast<long>(mpfr_get_exp(x_)) - static_cast<long>(prec());
        if (e < -1000) return 0x1p-1000;  // conservative floor
        if (e > 1000) return std::numeric_limits<double>::infinity();
        return std::ldexp(1.0, static_cast<int>(e));
    }

    friend bigfloat operator+(const bigfloat& a, const bigfloat& b) {
        bigfloat r(work_prec(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator-(const bigfloat& a, const bigfloat& b) {
        bigfloat r(work_prec(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator-(const bigfloat& a) {
        bigfloat r(a.prec());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator*(const bigfloat& a, const bigfloat& b) {
        bigfloat r(work_prec(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator/(const bigfloat& a, const bigfloat& b) {
        bigfloat r(work_prec(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat ln_big(const bigfloat& a) {
        bigfloat r(a.prec());
        mpfr_log(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat sqrt_big(const bigfloat& a) {
        bigfloat r(a.prec());
        mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat exp_big(const bigfloat& a) {
        bigfloat r(a.prec());
        mpfr_exp(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat abs_big(const bigfloat& a) {
        bigfloat r(a.prec());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend int cmp(const bigfloat& a, const bigfloat& b) {
        return mpfr_cmp(a.x_, b.x_);
    }

private:
    static mpfr_prec_t work_prec(const bigfloat& a, const bigfloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t x_;
};

template <>
struct scalar_model<bigfloat> {
    static double eps_abs(const bigfloat& x) { return 2.0 * x.ulp(); }
    static constexpr double libm_factor = 1.0;  // MPFR is correctly rounded
    static double to_double(const bigfloat& x) { return x.to_double(); }
    static bigfloat ln(const bigfloat& x) { return ln_big(x); }
    static bigfloat sqrt(const bigfloat& x) { return sqrt_big(x); }
    static bigfloat exp(const bigfloat& x) { return exp_big(x); }
    static bigfloat abs(const bigfloat& x) { return abs_big(x); }
    static bigfloat from_uint(std::uint64_t v) { return bigfloat::from_uint(v); }
};

}  // namespace thetaseq
