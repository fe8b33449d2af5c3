// errval.hpp
// A real number carried as (value, absolute error bound): the exact quantity
// is guaranteed to lie in [value - err, value + err].  All arithmetic widens
// the bound conservatively: propagated input error plus a one-ulp-style bound
// on the rounding of the freshly computed value.
//
// The scalar type is a template parameter so the same predicate code can run
// in plain double and, when a verdict comes out uncertain, be re-evaluated
// with an extended-precision scalar (see bigfloat.hpp).

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace thetaseq {

// Thrown when an operation cannot produce a finite error bound (division by
// an interval containing zero, log of an interval touching zero, ...).
// Checkers catch this and treat the verdict as uncertain, which triggers
// precision escalation.
class unboundable_error : public std::runtime_error {
public:
    explicit unboundable_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Per-scalar rounding model.  eps_abs(x) must bound the absolute rounding
// error of any single correctly-rounded operation that produced x, and
// libm_factor scales it for library transcendentals whose results may be a
// little worse than correctly rounded.
template <class S>
struct scalar_model;

template <>
struct scalar_model<double> {
    static double eps_abs(double x) {
        // one full ulp (>= 2x the round-to-nearest bound)
        return std::abs(x) * 0x1p-52;
    }
    static constexpr double libm_factor = 2.0;  // glibc log/exp are <= 1 ulp
    static double to_double(double x) { return x; }
    static double ln(double x) { return std::log(x); }
    static double sqrt(double x) { return std::sqrt(x); }
    static double exp(double x) { return std::exp(x); }
    static double abs(double x) { return std::abs(x); }
    static double from_uint(std::uint64_t v) { return static_cast<double>(v); }
};

template <class S>
struct ErrVal {
    S value{};
    double err = 0.0;  // absolute bound; always >= 0

    ErrVal() = default;
    ErrVal(S v, double e) : value(std::move(v)), err(e) {}

    double lo_d() const { return scalar_model<S>::to_double(value) - err; }
    double hi_d() const { return scalar_model<S>::to_double(value) + err; }

    // exact quantities (integers, dyadic rationals)
    static ErrVal exact(S v) { return ErrVal(std::move(v), 0.0); }
    // the result of a single correctly rounded operation
    static ErrVal rounded(S v) {
        double e = scalar_model<S>::eps_abs(v);
        return ErrVal(std::move(v), e);
    }
};

using Err = ErrVal<double>;

namespace detail {
template <class S>
double eps(const S& x) { return scalar_model<S>::eps_abs(x); }
}  // namespace detail

template <class S>
ErrVal<S> operator+(const ErrVal<S>& a, const ErrVal<S>& b) {
    S v = a.value + b.value;
    double e = a.err + b.err + detail::eps(v);
    return {std::move(v), e};
}

template <class S>
ErrVal<S> operator-(const ErrVal<S>& a, const ErrVal<S>& b) {
    S v = a.value - b.value;
    double e = a.err + b.err + detail::eps(v);
    return {std::move(v), e};
}

template <class S>
ErrVal<S> operator-(const ErrVal<S>& a) {
    return {-a.value, a.err};
}

template <class S>
ErrVal<S> operator*(const ErrVal<S>& a, const ErrVal<S>& b) {
    S v = a.value * b.value;
    double av = std::abs(scalar_model<S>::to_double(a.value));
    double bv = std::abs(scalar_model<S>::to_double(b.value));
    double e = av * b.err + bv * a.err + a.err * b.err + detail::eps(v);
    return {std::move(v), e};
}

template <class S>
ErrVal<S> operator/(const ErrVal<S>& a, const ErrVal<S>& b) {
    double bv = std::abs(scalar_model<S>::to_double(b.value));
    if (!(bv > b.err))
        throw unboundable_error("errval division: divisor interval contains 0");
    S v = a.value / b.value;
    double qv = std::abs(scalar_model<S>::to_double(v));
    double e = (a.err + qv * b.err) / (bv - b.err) + detail::eps(v);
    return {std::move(v), e};
}

template <class S>
ErrVal<S> abs(const ErrVal<S>& a) {
    return {scalar_model<S>::abs(a.value), a.err};
}

// natural log; requires the whole interval strictly positive
template <class S>
ErrVal<S> log(const ErrVal<S>& a) {
    double av = scalar_model<S>::to_double(a.value);
    if (!(av > a.err))
        throw unboundable_error("errval log: interval not strictly positive");
    S v = scalar_model<S>::ln(a.value);
    // |log(x) - log(v)| <= err / (v - err) for x in the interval
    double e = a.err / (av - a.err)
             + scalar_model<S>::libm_factor * detail::eps(v);
    return {std::move(v), e};
}

template <class S>
ErrVal<S> sqrt(const ErrVal<S>& a) {
    double av = scalar_model<S>::to_double(a.value);
    if (!(av > a.err))
        throw unboundable_error("errval sqrt: interval not strictly positive");
    S v = scalar_model<S>::sqrt(a.value);
    double root_lo = std::sqrt(av - a.err);
    double e = a.err / (2.0 * root_lo)
             + scalar_model<S>::libm_factor * detail::eps(v);
    return {std::move(v), e};
}

template <class S>
ErrVal<S> exp(const ErrVal<S>& a) {
    S v = scalar_model<S>::exp(a.value);
    double vv = std::abs(scalar_model<S>::to_double(v));
    // exp(x+d) - exp(x) <= exp(x) * d * e^d;  cap d to keep the bound sane
    double d = a.err;
    if (d > 1.0)
        throw unboundable_error("errval exp: error bound too wide");
    double e = vv * d * std::exp(d) + scalar_model<S>::libm_factor * detail::eps(v);
    return {std::move(v), e};
}

}  // namespace thetaseq
