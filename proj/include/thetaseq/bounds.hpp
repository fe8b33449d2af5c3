// bounds.hpp
// The catalogue of explicit inequalities on p_n, theta_n and the theta-gaps,
// each carrying the domain from which it is classically claimed to hold.
// check_inequality produces a certified three-way verdict at one index;
// scan_bound sweeps a range and reports the true crossover index together
// with the exact exception set, so a claimed domain can be confirmed or
// refuted mechanically.
//
// Several displays carry two domain margins in the literature (a proved
// conservative one and a sharper "checked by computation" one); those are
// scanned from the optimistic margin and both margins are kept in `source`.
// Indices where a formula is undefined (ln ln n at n=1, negative right-hand
// sides) count as failures, so they surface in the exception list.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "thetaseq/chebyshev.hpp"
#include "thetaseq/highprec.hpp"
#include "thetaseq/primes.hpp"
#include "thetaseq/scan.hpp"
#include "thetaseq/verdict.hpp"

namespace thetaseq {

// Shared read-only view used by every checker.
struct Tables {
    const PrimeTable& primes;
    const ThetaTable& theta;
    Escalator* escalator = nullptr;
};

enum class BoundId { a, b, c, d, e, f, g, h, i, j, k, l, m, n, o };

struct BoundInfo {
    BoundId id;
    std::string_view key;
    std::string_view source;          // formula + claimed domain(s)
    std::size_t claimed_start;        // scanned-against margin
    std::size_t defined_from;         // formula defined for n >= this
    bool uses_next_prime;
};

inline const std::array<BoundInfo, 15>& bound_registry() {
    static const std::array<BoundInfo, 15> reg = {{
        {BoundId::a, "a", "p_n > n ln n (Rosser; n >= 1)", 1, 1, false},
        {BoundId::b, "b", "p_n < n ln(n ln n) (Rosser-Schoenfeld; n >= 6)", 6, 2, false},
        {BoundId::c, "c", "p_n > n[ln(n ln n) - 1] (Dusart; n >= 2)", 2, 2, false},
        {BoundId::d, "d", "p_{n+1} < n[ln(n ln n) + 1] (n >= 6)", 6, 2, true},
        {BoundId::e, "e", "|theta_n - p_n| < n/2 (n >= 26)", 26, 1, false},
        {BoundId::f, "f", "theta_n > n[ln n - 1/2] (n >= 1)", 1, 1, false},
        {BoundId::g, "g", "theta_n < n[ln(n ln n) + 1/2] (n >= 2)", 2, 2, false},
        {BoundId::h, "h", "theta_n > n[ln(n ln n) - 3/2] (n >= 2)", 2, 2, false},
        {BoundId::i, "i", "theta_n >= n ln n (n >= 13)", 13, 1, false},
        {BoundId::j, "j", "theta_n <= n ln(n ln n) (n >= 3)", 3, 2, false},
        {BoundId::k, "k",
         "theta_n <= n[ln n + ln ln n - 1 + (ln ln n - 2)/ln n] (Massias-Robin; n >= 198)",
         198, 2, false},
        {BoundId::l, "l", "theta_n >= n[ln(n ln n) - 1] (n >= 5017)", 5017, 2, false},
        {BoundId::m, "m",
         "1 - 1/(2 ln p_n) < theta_n/p_n < 1 + 1/(2 ln p_n) "
         "(Rosser-Schoenfeld; margins n >= 103 / n >= 1)",
         103, 1, false},
        {BoundId::n, "n",
         "22/25 ln(p_n)/p_n < gap_n/theta_n < 2 ln(p_n)/p_n (margins n >= 1 / n >= 3)",
         3, 1, true},
        {BoundId::o, "o", "(9/10)/n < gap_n/theta_n < (9/5)/n (n >= 1)", 1, 1, true},
    }};
    return reg;
}

inline const BoundInfo& bound_info(BoundId id) {
    return bound_registry()[static_cast<std::size_t>(id)];
}

inline std::optional<BoundId> bound_from_key(std::string_view key) {
    for (const auto& b : bound_registry())
        if (b.key == key) return b.id;
    return std::nullopt;
}

// One inequality at one index, in the scalar supplied by the context.
template <class Ctx>
Verdict eval_bound(BoundId id, const Ctx& ctx, std::size_t n) {
    using ev = typename Ctx::ev;
    const ev N = ctx.exact(n);
    const ev half = ctx.exact_real(0.5);
    const ev one = ctx.exact(1);

    // ln(n ln n), used by b,c,d,g,h,j,l (defined for n >= 2)
    auto ln_nlnn = [&]() { return log(N * ctx.ln_uint(n)); };

    switch (id) {
        case BoundId::a:
            return certified_greater(ctx.exact(ctx.prime(n)), N * ctx.ln_uint(n));
        case BoundId::b:
            return certified_less(ctx.exact(ctx.prime(n)), N * ln_nlnn());
        case BoundId::c:
            return certified_greater(ctx.exact(ctx.prime(n)), N * (ln_nlnn() - one));
        case BoundId::d:
            return certified_less(ctx.exact(ctx.prime(n + 1)), N * (ln_nlnn() + one));
        case BoundId::e:
            return certified_less(abs(ctx.theta(n) - ctx.exact(ctx.prime(n))), N / ctx.exact(2));
        case BoundId::f:
            return certified_greater(ctx.theta(n), N * (ctx.ln_uint(n) - half));
        case BoundId::g:
            return certified_less(ctx.theta(n), N * (ln_nlnn() + half));
        case BoundId::h:
            return certified_greater(ctx.theta(n), N * (ln_nlnn() - ctx.exact_real(1.5)));
        case BoundId::i:
            return certified_geq(ctx.theta(n), N * ctx.ln_uint(n));
        case BoundId::j:
            return certified_leq(ctx.theta(n), N * ln_nlnn());
        case BoundId::k: {
            const ev ln_n = ctx.ln_uint(n);
            const ev lln = log(ln_n);
            const ev two = ctx.exact(2);
            return certified_leq(ctx.theta(n),
                                 N * (ln_n + lln - one + (lln - two) / ln_n));
        }
        case BoundId::l:
            return certified_geq(ctx.theta(n), N * (ln_nlnn() - one));
        case BoundId::m: {
            const ev ratio = ctx.theta(n) / ctx.exact(ctx.prime(n));
            const ev w = one / (ctx.exact(2) * ctx.ln_prime(n));
            return both(certified_greater(ratio, one - w),
                        certified_less(ratio, one + w));
        }
        case BoundId::n: {
            const ev rel = ctx.ln_prime(n + 1) / ctx.theta(n);
            const ev base = ctx.ln_prime(n) / ctx.exact(ctx.prime(n));
            return both(
                certified_greater(rel, (ctx.exact(22) / ctx.exact(25)) * base),
                certified_less(rel, ctx.exact(2) * base));
        }
        case BoundId::o: {
            const ev rel = ctx.ln_prime(n + 1) / ctx.theta(n);
            return both(certified_greater(rel, ctx.exact(9) / (ctx.exact(10) * N)),
                        certified_less(rel, ctx.exact(9) / (ctx.exact(5) * N)));
        }
    }
    return Verdict::uncertain;  // unreachable
}

// Certified verdict with automatic precision escalation.
inline Verdict check_inequality(const Tables& t, BoundId id, std::size_t n) {
    const BoundInfo& info = bound_info(id);
    if (n < 1) throw std::out_of_range("check_inequality: n must be >= 1");
    if (n < info.defined_from) return Verdict::fails;  // outside formula domain

    Verdict v;
    try {
        v = eval_bound(id, TableCtx{t.theta}, n);
    } catch (const unboundable_error&) {
        v = Verdict::uncertain;
    }
    if (v == Verdict::uncertain && t.escalator && t.escalator->enabled()) {
        v = t.escalator->escalate([&](mpfr_prec_t prec) {
            BigCtx ctx{t.escalator->provider(prec), t.primes, prec};
            return eval_bound(id, ctx, n);
        });
    }
    return v;
}

inline CrossoverReport scan_bound(const Tables& t, BoundId id, std::size_t lo,
                                  std::size_t hi,
                                  unsigned workers = default_workers()) {
    const BoundInfo& info = bound_info(id);
    if (hi > t.theta.n_max() ||
        hi + (info.uses_next_prime ? 1 : 0) > t.primes.count())
        throw insufficient_table_error("scan_bound: tables do not cover ceiling " +
                                       std::to_string(hi));
    return run_scan(std::string(info.key), std::string(info.source), info.claimed_start,
                    lo, hi, [&](std::size_t n) { return check_inequality(t, id, n); },
                    workers);
}

// ln(p_n + 2) / (ln p_n + 1/2): the bracket controlling the relative-gap
// lower bound; its global minimum sits at n = 7.
inline Err rel_gap_lower_bracket(const Tables& t, std::size_t n) {
    const Err lp = TableCtx{t.theta}.ln_prime(n);
    const Err num = log(Err::exact(static_cast<double>(t.primes.nth(n) + 2)));
    return num / (lp + Err::exact(0.5));
}

}  // namespace thetaseq
