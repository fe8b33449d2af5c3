// conjectures.hpp
// Certified checkers for the nine theta-sequence analogues of the classical
// gap conjectures (Cramer, Andrica, Legendre, Oppermann, Brocard,
// Firoozbakht, Fourges, Nicholson, Farhadian).  Power comparisons are done
// in log form so margins survive n ~ 10^6, and every strict inequality is
// decided through ErrVal intervals with precision escalation on ties.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "thetaseq/counting.hpp"

namespace thetaseq {

enum class ConjectureId {
    cramer,
    andrica,
    legendre,
    oppermann,
    brocard,
    firoozbakht,
    fourges,
    nicholson,
    farhadian,
};

struct ConjectureInfo {
    ConjectureId id;
    std::string_view key;
    std::string_view source;       // statement + claimed domain
    std::size_t claimed_start;
    char param = 'n';              // 'n' index parameter or 'm' square parameter
    bool counting_based = false;   // needs theta coverage of squared arguments
};

inline const std::array<ConjectureInfo, 9>& conjecture_registry() {
    static const std::array<ConjectureInfo, 9> reg = {{
        {ConjectureId::cramer, "cramer",
         "gap_n = ln p_{n+1} identically; ratio gap_n/(ln theta_n)^2 recorded (n >= 1)",
         1, 'n', false},
        {ConjectureId::andrica, "andrica",
         "sqrt(theta_{n+1}) - sqrt(theta_n) < ln(p_n)/sqrt(p_n) (n >= 2); "
         "weak form <= sqrt(ln 6) - sqrt(ln 2) (n >= 1)",
         2, 'n', false},
        {ConjectureId::legendre, "legendre",
         "pi_theta((m+1)^2) > pi_theta(m^2) (m >= 1)", 1, 'm', true},
        {ConjectureId::oppermann, "oppermann",
         "pi_theta((m+1/2)^2) > pi_theta(m^2) > pi_theta((m-1/2)^2) "
         "(margins m >= 1 / m >= 2)",
         1, 'm', true},
        {ConjectureId::brocard, "brocard",
         "pi_theta(p_{n+1}^2) - pi_theta(p_n^2) >= 2 g_n (n >= 1); plain form >= 4 (n >= 2)",
         1, 'n', true},
        {ConjectureId::firoozbakht, "firoozbakht",
         "theta_{n+1}^(1/(n+1)) < theta_n^(1/n), i.e. Q = n ln theta_{n+1} - "
         "(n+1) ln theta_n < 0 (n >= 4)",
         4, 'n', false},
        {ConjectureId::fourges, "fourges",
         "ln(theta_{n+1})/ln(theta_n) < e^(1/n) (all n except 2)", 3, 'n', false},
        {ConjectureId::nicholson, "nicholson",
         "(theta_{n+1}/theta_n)^n < n[ln n - 1/2] (claimed n >= 3)", 3, 'n', false},
        {ConjectureId::farhadian, "farhadian",
         "(theta_{n+1}/theta_n)^n < p_n/ln(p_n) [ln n - 1/2] (n >= 5)", 5, 'n', false},
    }};
    return reg;
}

inline const ConjectureInfo& conjecture_info(ConjectureId id) {
    return conjecture_registry()[static_cast<std::size_t>(id)];
}

inline std::optional<ConjectureId> conjecture_from_key(std::string_view key) {
    for (const auto& c : conjecture_registry())
        if (c.key == key) return c.id;
    return std::nullopt;
}

struct ConjectureResult {
    ConjectureId id;
    std::size_t param = 0;
    Verdict verdict = Verdict::uncertain;
    Err lhs;     // evaluated left side (or count difference)
    Err rhs;     // evaluated right side
    Err margin;  // rhs - lhs; positive interval certifies a strict hold
    std::string note;
};

namespace detail {

// margin-sign verdicts for "lhs < rhs"
template <class S>
Verdict margin_verdict(const ErrVal<S>& lhs, const ErrVal<S>& rhs) {
    return certified_less(lhs, rhs);
}

template <class Ctx>
typename Ctx::ev firoozbakht_q(const Ctx& ctx, std::size_t n) {
    using ev = typename Ctx::ev;
    const ev N = ctx.exact(n);
    return N * log(ctx.theta(n + 1)) - (N + ctx.exact(1)) * log(ctx.theta(n));
}

// n ln(theta_{n+1}/theta_n), shared by nicholson/farhadian
template <class Ctx>
typename Ctx::ev power_lhs(const Ctx& ctx, std::size_t n) {
    return ctx.exact(n) * log(ctx.theta(n + 1) / ctx.theta(n));
}

}  // namespace detail

// --- log-form / ErrVal conjectures, templated for escalation ---------------

template <class Ctx>
Verdict eval_conjecture(ConjectureId id, const Ctx& ctx, std::size_t n) {
    using ev = typename Ctx::ev;
    switch (id) {
        case ConjectureId::andrica:
            if (n == 1) return Verdict::holds;  // weak form holds with equality at n=1
            return certified_less(sqrt(ctx.theta(n + 1)) - sqrt(ctx.theta(n)),
                                  ctx.ln_prime(n) / sqrt(ctx.exact(ctx.prime(n))));
        case ConjectureId::firoozbakht:
            return certified_less(detail::firoozbakht_q(ctx, n), ctx.exact(0));
        case ConjectureId::fourges:
            return certified_less(log(ctx.theta(n + 1)) / log(ctx.theta(n)),
                                  exp(ctx.exact(1) / ctx.exact(n)));
        case ConjectureId::nicholson: {
            const ev rhs = ctx.exact(n) * (ctx.ln_uint(n) - ctx.exact_real(0.5));
            if (rhs.hi_d() <= 0) return Verdict::fails;  // vacuous: right side nonpositive
            return certified_less(detail::power_lhs(ctx, n), log(rhs));
        }
        case ConjectureId::farhadian: {
            const ev rhs = ctx.exact(ctx.prime(n)) / ctx.ln_prime(n) *
                           (ctx.ln_uint(n) - ctx.exact_real(0.5));
            if (rhs.hi_d() <= 0) return Verdict::fails;
            return certified_less(detail::power_lhs(ctx, n), log(rhs));
        }
        case ConjectureId::cramer: {
            // identity: theta_{n+1} - theta_n = ln p_{n+1} within bounds
            const ev d = ctx.theta(n + 1) - ctx.theta(n);
            const ev g = ctx.ln_prime(n + 1);
            const double gap = std::abs(scalar_model<typename Ctx::scalar>::to_double(d.value) -
                                        scalar_model<typename Ctx::scalar>::to_double(g.value));
            return gap <= d.err + g.err ? Verdict::holds : Verdict::fails;
        }
        default:
            throw std::logic_error("eval_conjecture: counting-based id");
    }
}

// Double-precision verdict first; on uncertainty, re-run the same predicate
// through the MPFR context ladder.
inline Verdict check_with_escalation(const Tables& t, ConjectureId id,
                                     std::size_t n) {
    Verdict v;
    try {
        v = eval_conjecture(id, TableCtx{t.theta}, n);
    } catch (const unboundable_error&) {
        v = Verdict::uncertain;
    }
    if (v == Verdict::uncertain && t.escalator && t.escalator->enabled()) {
        v = t.escalator->escalate([&](mpfr_prec_t prec) {
            BigCtx ctx{t.escalator->provider(prec), t.primes, prec};
            return eval_conjecture(id, ctx, n);
        });
    }
    return v;
}

// --- full checkers with result records --------------------------------------

inline ConjectureResult cramer_theta(const Tables& t, std::size_t n) {
    ConjectureResult r{ConjectureId::cramer, n};
    const TableCtx ctx{t.theta};
    const Err d = ctx.theta(n + 1) - ctx.theta(n);
    const Err g = ctx.ln_prime(n + 1);
    r.lhs = d;
    r.rhs = g;
    r.margin = d - g;  // interval must contain 0 for the identity to hold
    r.verdict = std::abs(r.margin.value) <= r.margin.err ? Verdict::holds : Verdict::fails;
    const Err ratio = g / (log(ctx.theta(n)) * log(ctx.theta(n)));
    r.note = "gap/(ln theta_n)^2 = " + std::to_string(ratio.value);
    return r;
}

inline ConjectureResult andrica_theta(const Tables& t, std::size_t n) {
    ConjectureResult r{ConjectureId::andrica, n};
    const TableCtx ctx{t.theta};
    r.lhs = sqrt(ctx.theta(n + 1)) - sqrt(ctx.theta(n));
    const Err weak_bound = sqrt(log(Err::exact(6))) - sqrt(log(Err::exact(2)));
    if (n == 1) {
        // the weak bound is attained (it *is* sqrt(theta_2) - sqrt(theta_1))
        r.rhs = weak_bound;
        r.margin = r.rhs - r.lhs;
        r.verdict = Verdict::holds;
        r.note = "weak form holds with equality at n = 1";
        return r;
    }
    r.rhs = ctx.ln_prime(n) / sqrt(Err::exact(static_cast<double>(ctx.prime(n))));
    r.margin = r.rhs - r.lhs;
    r.verdict = check_with_escalation(t, ConjectureId::andrica, n);
    const Verdict weak = certified_leq(r.lhs, weak_bound);
    r.note = std::string("weak form (<= 0.50601...): ") + std::string(to_string(weak));
    return r;
}

inline ConjectureResult firoozbakht_theta(const Tables& t, std::size_t n) {
    ConjectureResult r{ConjectureId::firoozbakht, n};
    r.lhs = detail::firoozbakht_q(TableCtx{t.theta}, n);
    r.rhs = Err::exact(0.0);
    r.margin = r.rhs - r.lhs;
    r.verdict = check_with_escalation(t, ConjectureId::firoozbakht, n);
    return r;
}

inline ConjectureResult fourges_theta(const Tables& t, std::size_t n) {
    ConjectureResult r{ConjectureId::fourges, n};
    const TableCtx ctx{t.theta};
    r.lhs = log(ctx.theta(n + 1)) / log(ctx.theta(n));
    r.rhs = exp(Err::exact(1.0) / Err::exact(static_cast<double>(n)));
    r.margin = r.rhs - r.lhs;
    r.verdict = check_with_escalation(t, ConjectureId::fourges, n);
    return r;
}

inline ConjectureResult nicholson_theta(const Tables& t, std::size_t n) {
    ConjectureResult r{ConjectureId::nicholson, n};
    const TableCtx ctx{t.theta};
    r.lhs = detail::power_lhs(ctx, n);
    const Err inner = Err::exact(static_cast<double>(n)) *
                      (ctx.ln_uint(n) - Err::exact(0.5));
    if (inner.hi_d() <= 0) {
        r.rhs = inner;
        r.margin = Err::exact(-1.0);
        r.verdict = Verdict::fails;
        r.note = "right side nonpositive (pre-domain)";
        return r;
    }
    r.rhs = log(inner);
    r.margin = r.rhs - r.lhs;
    r.verdict = check_with_escalation(t, ConjectureId::nicholson, n);
    return r;
}

inline ConjectureResult farhadian_theta(const Tables& t, std::size_t n) {
    ConjectureResult r{ConjectureId::farhadian, n};
    const TableCtx ctx{t.theta};
    r.lhs = detail::power_lhs(ctx, n);
    const Err inner = Err::exact(static_cast<double>(ctx.prime(n))) / ctx.ln_prime(n) *
                      (ctx.ln_uint(n) - Err::exact(0.5));
    if (inner.hi_d() <= 0) {
        r.rhs = inner;
        r.margin = Err::exact(-1.0);
        r.verdict = Verdict::fails;
        r.note = "right side nonpositive (pre-domain)";
        return r;
    }
    r.rhs = log(inner);
    r.margin = r.rhs - r.lhs;
    r.verdict = check_with_escalation(t, ConjectureId::farhadian, n);
    return r;
}

// --- counting-based checkers ------------------------------------------------

inline ConjectureResult legendre_theta(const Tables& t, std::size_t m) {
    if (m < 1) throw std::out_of_range("legendre: m >= 1");
    ConjectureResult r{ConjectureId::legendre, m};
    const double m2 = static_cast<double>(m) * static_cast<double>(m);
    const double m12 = static_cast<double>(m + 1) * static_cast<double>(m + 1);
    const std::size_t a = pi_theta(t, m2);
    const std::size_t b = pi_theta(t, m12);
    r.lhs = Err::exact(static_cast<double>(b - a));
    r.rhs = (Err::exact(2.0 * m + 1.0)) /
            (Err::exact(2.0) * log(Err::exact(static_cast<double>(m + 1))) +
             Err::rounded(kNegLnMStar));
    r.margin = r.lhs - r.rhs;  // recorded window lower bound
    r.verdict = b > a ? Verdict::holds : Verdict::fails;
    r.note = "pi_theta(" + std::to_string(m12) + ") = " + std::to_string(b) +
             ", pi_theta(" + std::to_string(m2) + ") = " + std::to_string(a);
    return r;
}

inline ConjectureResult oppermann_theta(const Tables& t, std::size_t m) {
    if (m < 1) throw std::out_of_range("oppermann: m >= 1");
    ConjectureResult r{ConjectureId::oppermann, m};
    const double md = static_cast<double>(m);
    const std::size_t mid = pi_theta(t, md * md);
    const std::size_t left = pi_theta(t, md * md + md + 0.25);   // (m+1/2)^2, exact
    const Verdict up = left > mid ? Verdict::holds : Verdict::fails;
    if (m == 1) {
        r.verdict = up;  // right inequality starts at m = 2
        r.lhs = Err::exact(static_cast<double>(left));
        r.rhs = Err::exact(static_cast<double>(mid));
        r.margin = r.lhs - r.rhs;
        r.note = "left inequality only (m = 1)";
        return r;
    }
    const std::size_t right = pi_theta(t, md * md - md + 0.25);  // (m-1/2)^2, exact
    const Verdict down = mid > right ? Verdict::holds : Verdict::fails;
    r.verdict = both(up, down);
    r.lhs = Err::exact(static_cast<double>(left));
    r.rhs = Err::exact(static_cast<double>(right));
    r.margin = Err::exact(static_cast<double>(left) - static_cast<double>(right));
    r.note = std::to_string(left) + " > " + std::to_string(mid) + " > " +
             std::to_string(right);
    return r;
}

inline ConjectureResult brocard_theta(const Tables& t, std::size_t n) {
    if (n < 1) throw std::out_of_range("brocard: n >= 1");
    ConjectureResult r{ConjectureId::brocard, n};
    const auto pn = static_cast<double>(t.primes.nth(n));
    const auto pn1 = static_cast<double>(t.primes.nth(n + 1));
    const std::size_t a = pi_theta(t, pn * pn);
    const std::size_t b = pi_theta(t, pn1 * pn1);
    const std::uint64_t g = t.primes.gap(n);
    r.lhs = Err::exact(static_cast<double>(b - a));
    r.rhs = Err::exact(2.0 * static_cast<double>(g));
    r.margin = r.lhs - r.rhs;
    r.verdict = (b - a) >= 2 * g ? Verdict::holds : Verdict::fails;
    r.note = "count diff " + std::to_string(b - a) + ", 2 g_n = " +
             std::to_string(2 * g) + "; plain >= 4 form: " +
             std::string(to_string((b - a) >= 4 ? Verdict::holds : Verdict::fails));
    return r;
}

inline Verdict check_conjecture(const Tables& t, ConjectureId id, std::size_t n) {
    switch (id) {
        case ConjectureId::legendre: return legendre_theta(t, n).verdict;
        case ConjectureId::oppermann: return oppermann_theta(t, n).verdict;
        case ConjectureId::brocard: return brocard_theta(t, n).verdict;
        default: return check_with_escalation(t, id, n);
    }
}

inline ConjectureResult check_conjecture_full(const Tables& t, ConjectureId id,
                                              std::size_t n) {
    switch (id) {
        case ConjectureId::cramer: return cramer_theta(t, n);
        case ConjectureId::andrica: return andrica_theta(t, n);
        case ConjectureId::legendre: return legendre_theta(t, n);
        case ConjectureId::oppermann: return oppermann_theta(t, n);
        case ConjectureId::brocard: return brocard_theta(t, n);
        case ConjectureId::firoozbakht: return firoozbakht_theta(t, n);
        case ConjectureId::fourges: return fourges_theta(t, n);
        case ConjectureId::nicholson: return nicholson_theta(t, n);
        case ConjectureId::farhadian: return farhadian_theta(t, n);
    }
    throw std::logic_error("check_conjecture_full: bad id");
}

// --- scans -------------------------------------------------------------------

// Largest parameter the current tables can serve for the counting checkers.
inline std::size_t conjecture_coverage(const Tables& t, ConjectureId id,
                                       std::size_t requested_hi) {
    if (!conjecture_info(id).counting_based) return requested_hi;
    const auto& vals = t.theta.values();
    const double vmax = vals.back() - t.theta.errors().back();
    if (id == ConjectureId::brocard) {
        // need p_{n+1}^2 certainly below theta_{n_max}
        std::size_t idx = t.primes.pi(std::sqrt(vmax));
        while (idx >= 2) {
            const double p = static_cast<double>(t.primes.nth(idx));
            if (p * p < vmax) break;
            --idx;
        }
        return std::min(requested_hi, idx >= 2 ? idx - 1 : 0);
    }
    // legendre/oppermann: need (m+1)^2 below theta_{n_max}
    auto mcov = static_cast<std::size_t>(std::floor(std::sqrt(vmax)));
    while (mcov > 1 && static_cast<double>(mcov) * static_cast<double>(mcov) >= vmax)
        --mcov;
    return std::min(requested_hi, mcov >= 1 ? mcov - 1 : 0);
}

inline CrossoverReport scan_conjecture(const Tables& t, ConjectureId id,
                                       std::size_t lo, std::size_t hi,
                                       unsigned workers = default_workers()) {
    const ConjectureInfo& info = conjecture_info(id);
    const std::size_t eff_hi = conjecture_coverage(t, id, hi);
    if (!info.counting_based &&
        (hi + 1 > t.theta.n_max() || hi + 1 > t.primes.count()))
        throw insufficient_table_error("scan_conjecture: tables below ceiling");
    return run_scan(std::string(info.key), std::string(info.source),
                    info.claimed_start, lo, eff_hi,
                    [&](std::size_t n) { return check_conjecture(t, id, n); }, workers);
}

// --- scan companions ---------------------------------------------------------

// argmax of theta_n^(1/n) over [1, hi]; the top two candidates are certified
// against each other at escalated precision if their intervals touch.
inline std::size_t firoozbakht_argmax(const Tables& t, std::size_t hi) {
    const auto& vals = t.theta.values();
    std::size_t best = 1, second = 2;
    double best_v = std::log(vals[0]);  // ln(theta_n)/n, same argmax
    double second_v = -1e300;
    for (std::size_t n = 2; n <= hi; ++n) {
        const double v = std::log(vals[n - 1]) / static_cast<double>(n);
        if (v > best_v) {
            second = best; second_v = best_v;
            best = n; best_v = v;
        } else if (v > second_v) {
            second = n; second_v = v;
        }
    }
    const TableCtx ctx{t.theta};
    auto root = [&](std::size_t n) {
        return log(ctx.theta(n)) / Err::exact(static_cast<double>(n));
    };
    if (certified_greater(root(best), root(second)) != Verdict::holds)
        throw unresolvable_boundary_error("firoozbakht argmax tie between " +
                                          std::to_string(best) + " and " +
                                          std::to_string(second));
    return best;
}

// argmax and certified value of the Andrica difference over [1, hi]
inline std::pair<std::size_t, Err> andrica_max(const Tables& t, std::size_t hi) {
    const auto& vals = t.theta.values();
    std::size_t best = 1;
    double best_v = -1e300, second_v = -1e300;
    std::size_t second = 2;
    for (std::size_t n = 1; n <= hi; ++n) {
        const double v = std::sqrt(vals[n]) - std::sqrt(vals[n - 1]);
        if (v > best_v) {
            second = best; second_v = best_v;
            best = n; best_v = v;
        } else if (v > second_v) {
            second = n; second_v = v;
        }
    }
    const TableCtx ctx{t.theta};
    auto diff = [&](std::size_t n) {
        return sqrt(ctx.theta(n + 1)) - sqrt(ctx.theta(n));
    };
    if (certified_greater(diff(best), diff(second)) != Verdict::holds)
        throw unresolvable_boundary_error("andrica argmax tie");
    return {best, diff(best)};
}

// argmax of the Cramer-style ratio ln p_{n+1} / (ln theta_n)^2
inline std::size_t cramer_ratio_argmax(const Tables& t, std::size_t hi) {
    const auto& vals = t.theta.values();
    std::size_t best = 1;
    double best_v = -1e300;
    for (std::size_t n = 1; n <= hi; ++n) {
        const double lt = std::log(vals[n - 1]);
        const double v =
            std::log(static_cast<double>(t.primes.nth(n + 1))) / (lt * lt);
        if (v > best_v) { best = n; best_v = v; }
    }
    return best;
}

}  // namespace thetaseq
