// counting.hpp
// pi_theta(x) = #{ i : theta_i <= x } (inclusive at equality), its interval
// sandwich bounds, and the extreme gaps over a window.  Counts come from a
// binary search over the monotone theta values; whenever x lands inside a
// theta_i uncertainty interval the comparison is escalated before answering,
// so every returned count is certified.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "thetaseq/bounds.hpp"
#include "thetaseq/chebyshev.hpp"
#include "thetaseq/highprec.hpp"
#include "thetaseq/primes.hpp"
#include "thetaseq/verdict.hpp"

namespace thetaseq {

// Raised when no full theta-gap fits in the queried window.
class empty_interval_error : public std::runtime_error {
public:
    explicit empty_interval_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when escalation cannot separate x from a theta value (not expected
// for the rational arguments used in practice: theta_n is transcendental).
class unresolvable_boundary_error : public std::runtime_error {
public:
    explicit unresolvable_boundary_error(const std::string& what)
        : std::runtime_error(what) {}
};

namespace detail {

// certified theta_i <= x (x exact)
inline Verdict theta_leq(const Tables& t, std::size_t i, double x) {
    Verdict v = certified_leq(t.theta.theta(i), Err::exact(x));
    if (v == Verdict::uncertain && t.escalator && t.escalator->enabled()) {
        v = t.escalator->escalate([&](mpfr_prec_t prec) {
            auto th = t.escalator->provider(prec).theta(i);
            return certified_leq(th, ErrVal<bigfloat>::exact(
                                         bigfloat::from_double(x, prec)));
        });
    }
    return v;
}

inline Verdict theta_less(const Tables& t, std::size_t i, double x) {
    Verdict v = certified_less(t.theta.theta(i), Err::exact(x));
    if (v == Verdict::uncertain && t.escalator && t.escalator->enabled()) {
        v = t.escalator->escalate([&](mpfr_prec_t prec) {
            auto th = t.escalator->provider(prec).theta(i);
            return certified_less(th, ErrVal<bigfloat>::exact(
                                          bigfloat::from_double(x, prec)));
        });
    }
    return v;
}

}  // namespace detail

// Largest n with theta_n <= x; 0 if x < theta_1.
inline std::size_t pi_theta(const Tables& t, double x) {
    const auto& vals = t.theta.values();
    const auto& errs = t.theta.errors();
    const std::size_t n_max = vals.size();
    if (n_max == 0 || !(x < vals.back() - errs.back()))
        throw insufficient_table_error("pi_theta: x = " + std::to_string(x) +
                                       " not certainly below theta_" +
                                       std::to_string(n_max));

    std::size_t k = static_cast<std::size_t>(
        std::upper_bound(vals.begin(), vals.end(), x) - vals.begin());

    // certify: theta_k <= x and theta_{k+1} > x (indices 1-based)
    while (k >= 1) {
        const Verdict v = detail::theta_leq(t, k, x);
        if (v == Verdict::holds) break;
        if (v == Verdict::fails) { --k; continue; }
        throw unresolvable_boundary_error("pi_theta: cannot separate theta_" +
                                          std::to_string(k) + " from x");
    }
    while (k + 1 <= n_max) {
        const Verdict v = detail::theta_leq(t, k + 1, x);
        if (v == Verdict::fails) break;
        if (v == Verdict::holds) { ++k; continue; }
        throw unresolvable_boundary_error("pi_theta: cannot separate theta_" +
                                          std::to_string(k + 1) + " from x");
    }
    return k;
}

// Closed-form window bounds on pi_theta(x) - pi_theta(y):
//   (x-y)/(ln x + 1.059660101)  <  count  <  (x-y)/(ln y - 7.5e-7)
// where 1.059660101 = -ln(m*) = -ln(ln2 / 2) and 7.5e-7 bounds ln(M*).
struct SandwichBounds {
    Err lower;
    Err upper;
};

inline constexpr double kNegLnMStar = 1.059660101;  // -ln(m*), truncated
inline constexpr double kLnMStarBound = 7.5e-7;     // ln(M*) upper bound

inline SandwichBounds pi_theta_sandwich(double y, double x) {
    if (!(y >= 1.0) || !(x > y))
        throw std::domain_error("pi_theta_sandwich: need 1 <= y < x");
    const Err span = Err::exact(x) - Err::exact(y);
    const Err lower = span / (log(Err::exact(x)) + Err::rounded(kNegLnMStar));
    const Err upper = span / (log(Err::exact(y)) - Err::rounded(kLnMStarBound));
    return {lower, upper};
}

namespace detail {

// gap indices i with (theta_i, theta_{i+1}) strictly inside (y, x):
// first = smallest i with theta_i > y, last+1 = largest j with theta_j < x.
inline std::pair<std::size_t, std::size_t> inner_gap_range(const Tables& t,
                                                           double y, double x) {
    if (!(x > y)) throw std::domain_error("theta-gap window: need y < x");
    const auto& vals = t.theta.values();
    const std::size_t n_max = vals.size();

    auto require_decided = [](Verdict v, const char* what) {
        if (v == Verdict::uncertain)
            throw unresolvable_boundary_error(std::string("theta-gap window: ") + what);
        return v;
    };

    std::size_t first = static_cast<std::size_t>(
        std::upper_bound(vals.begin(), vals.end(), y) - vals.begin()) + 1;
    while (first > 1 &&
           require_decided(theta_leq(t, first - 1, y), "lower edge") == Verdict::fails)
        --first;
    while (first <= n_max &&
           require_decided(theta_leq(t, first, y), "lower edge") == Verdict::holds)
        ++first;

    std::size_t last = static_cast<std::size_t>(
        std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
    while (last + 1 <= n_max &&
           require_decided(theta_less(t, last + 1, x), "upper edge") == Verdict::holds)
        ++last;
    while (last >= 1 &&
           require_decided(theta_less(t, last, x), "upper edge") == Verdict::fails)
        --last;

    if (last < first + 1)
        throw empty_interval_error("no full theta-gap inside (" +
                                   std::to_string(y) + ", " + std::to_string(x) + ")");
    return {first, last - 1};  // gaps (theta_i, theta_{i+1}) for i in [first, last-1]
}

}  // namespace detail

// Maximum theta-gap fully contained in (y, x).  Gap values ln p_{i+1} grow
// with i, so the extremes sit at the ends of the admissible index range.
inline Err max_theta_gap(const Tables& t, double y, double x) {
    const auto [first, last] = detail::inner_gap_range(t, y, x);
    (void)first;
    return t.theta.gap(last);
}

inline Err min_theta_gap(const Tables& t, double y, double x) {
    const auto [first, last] = detail::inner_gap_range(t, y, x);
    (void)last;
    return t.theta.gap(first);
}

// m* = theta_1/p_1 (global minimum of theta_i/p_i); M* is imported, only its
// bound is range-checked.
struct ExtremaConstants {
    Err m_star;
    double M_star_bound = 1.0 + 7.5e-7;
    Err ln_m_star;
    double ln_M_star_bound = 7.5e-7;
};

inline ExtremaConstants extrema_constants(const ThetaTable& theta) {
    ExtremaConstants c;
    c.m_star = theta.ratio_theta_over_p(1);
    c.ln_m_star = log(c.m_star);
    return c;
}

struct ExtremaScan {
    std::size_t checked = 0;
    std::vector<std::size_t> min_violations;  // theta_i/p_i < m* (never expected)
    std::vector<std::size_t> max_violations;  // theta_i/p_i >= 1 + 7.5e-7
    std::vector<std::size_t> uncertain;
};

// Certify m* <= theta_i/p_i < M*-bound for every i in [1, n_hi].
inline ExtremaScan verify_extrema(const Tables& t, std::size_t n_hi,
                                  unsigned workers = default_workers()) {
    const ExtremaConstants c = extrema_constants(t.theta);
    ExtremaScan out;
    out.checked = n_hi;
    auto rep = run_scan(
        "extrema", "", 1, 1, n_hi,
        [&](std::size_t i) {
            const Err ratio = t.theta.ratio_theta_over_p(i);
            Verdict hi_ok = certified_less(ratio, Err::exact(c.M_star_bound));
            Verdict lo_ok = i == 1 ? Verdict::holds  // the minimum itself
                                   : certified_greater(ratio, c.m_star);
            if (lo_ok == Verdict::uncertain && t.escalator && t.escalator->enabled()) {
                lo_ok = t.escalator->escalate([&](mpfr_prec_t prec) {
                    auto& hp = t.escalator->provider(prec);
                    auto r = hp.theta(i) / ErrVal<bigfloat>::exact(
                                               bigfloat::from_uint(t.primes.nth(i), prec));
                    auto m = hp.theta(1) / ErrVal<bigfloat>::exact(
                                               bigfloat::from_uint(2, prec));
                    return certified_greater(r, m);
                });
            }
            return both(lo_ok, hi_ok);
        },
        workers);
    // classify: re-test which side failed
    for (std::size_t i : rep.exceptions) {
        const Err ratio = t.theta.ratio_theta_over_p(i);
        if (certified_less(ratio, Err::exact(c.M_star_bound)) == Verdict::fails)
            out.max_violations.push_back(i);
        else
            out.min_violations.push_back(i);
    }
    out.uncertain = rep.uncertain;
    return out;
}

// pi(x/M*-bound) <= pi_theta(x) <= pi(x/m*)
inline Verdict verify_pi_sandwich_vs_prime_pi(const Tables& t, double x) {
    const ExtremaConstants c = extrema_constants(t.theta);
    const std::size_t pt = pi_theta(t, x);

    const Err q_lo = Err::exact(x) / Err::rounded(c.M_star_bound);
    const Err q_hi = Err::exact(x) / c.m_star;
    auto pi_of = [&](const Err& q) -> std::size_t {
        const std::size_t a = t.primes.pi(q.lo_d());
        const std::size_t b = t.primes.pi(q.hi_d());
        if (a != b)
            throw unresolvable_boundary_error(
                "prime_pi argument interval straddles a prime");
        return a;
    };
    const std::size_t lo = pi_of(q_lo);
    const std::size_t hi = pi_of(q_hi);
    return (lo <= pt && pt <= hi) ? Verdict::holds : Verdict::fails;
}

}  // namespace thetaseq
