// highprec.hpp
// Extended-precision recomputation path used when a double-precision verdict
// comes out uncertain.  HighPrecTheta rebuilds theta_n with MPFR at a given
// precision, caching anchors every 2^16 indices so repeated escalations near
// a crossover stay cheap.  Escalator owns one provider per precision level
// and is safe to share across scan workers.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "thetaseq/bigfloat.hpp"
#include "thetaseq/chebyshev.hpp"
#include "thetaseq/errval.hpp"
#include "thetaseq/primes.hpp"
#include "thetaseq/verdict.hpp"

namespace thetaseq {

class HighPrecTheta {
public:
    HighPrecTheta(const PrimeTable& primes, mpfr_prec_t prec)
        : primes_(&primes), prec_(prec) {
        anchors_.push_back(bigfloat(prec_));  // theta_0 = 0
        anchor_err_.push_back(0.0);
    }

    mpfr_prec_t prec() const { return prec_; }

    // theta_n as an extended-precision ErrVal (thread-safe)
    ErrVal<bigfloat> theta(std::size_t n) {
        if (n < 1 || n > primes_->count())
            throw std::out_of_range("highprec theta: index outside prime table");
        std::lock_guard<std::mutex> lock(mu_);
        const std::size_t anchor = n / kStride;
        ensure_anchors(anchor);
        bigfloat acc = anchors_[anchor];
        double err = anchor_err_[anchor];
        for (std::size_t i = anchor * kStride + 1; i <= n; ++i)
            accumulate(acc, err, i);
        return {std::move(acc), err};
    }

    ErrVal<bigfloat> ln_prime(std::size_t n) const {
        bigfloat lp = ln_big(bigfloat::from_uint(primes_->nth(n), prec_));
        double e = scalar_model<bigfloat>::eps_abs(lp);
        return {std::move(lp), e};
    }

private:
    static constexpr std::size_t kStride = 1u << 16;

    void ensure_anchors(std::size_t upto) {
        while (anchors_.size() <= upto) {
            bigfloat acc = anchors_.back();
            double err = anchor_err_.back();
            const std::size_t base = (anchors_.size() - 1) * kStride;
            for (std::size_t i = base + 1; i <= base + kStride; ++i)
                accumulate(acc, err, i);
            anchors_.push_back(acc);
            anchor_err_.push_back(err);
        }
    }

    void accumulate(bigfloat& acc, double& err, std::size_t i) const {
        bigfloat term = ln_big(bigfloat::from_uint(primes_->nth(i), prec_));
        err += scalar_model<bigfloat>::eps_abs(term);
        acc = acc + term;
        err += scalar_model<bigfloat>::eps_abs(acc);
    }

    const PrimeTable* primes_;
    mpfr_prec_t prec_;
    std::vector<bigfloat> anchors_;
    std::vector<double> anchor_err_;
    std::mutex mu_;
};

// Lazily built per-precision providers plus the escalation ladder.
class Escalator {
public:
    explicit Escalator(const PrimeTable& primes, bool enabled = true)
        : primes_(&primes), enabled_(enabled) {}

    bool enabled() const { return enabled_; }

    static constexpr mpfr_prec_t ladder[3] = {256, 768, 2048};

    HighPrecTheta& provider(mpfr_prec_t prec) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& slot = providers_[prec];
        if (!slot) slot = std::make_unique<HighPrecTheta>(*primes_, prec);
        return *slot;
    }

    // Re-run `eval` (mpfr_prec_t -> Verdict) up the ladder until decisive.
    template <class F>
    Verdict escalate(F&& eval) {
        Verdict v = Verdict::uncertain;
        for (mpfr_prec_t p : ladder) {
            try {
                v = eval(p);
            } catch (const unboundable_error&) {
                v = Verdict::uncertain;
            }
            if (v != Verdict::uncertain) break;
        }
        return v;
    }

private:
    const PrimeTable* primes_;
    bool enabled_;
    std::map<mpfr_prec_t, std::unique_ptr<HighPrecTheta>> providers_;
    std::mutex mu_;
};

// ---------------------------------------------------------------------------
// Evaluation contexts.  Predicates are written once, templated on a context
// that supplies theta_n, ln p_n, and exact constants in the working scalar.
// ---------------------------------------------------------------------------

struct TableCtx {
    using scalar = double;
    using ev = Err;

    const ThetaTable& theta_table;

    ev theta(std::size_t n) const { return theta_table.theta(n); }
    ev ln_prime(std::size_t n) const { return ln_uint(prime(n)); }
    std::uint64_t prime(std::size_t n) const { return theta_table.primes().nth(n); }
    ev exact(std::uint64_t v) const { return ev::exact(static_cast<double>(v)); }
    // squares etc. stay exact in double up to 2^53
    ev exact_real(double v) const { return ev::exact(v); }
    // decimal literal: not exactly representable, budget one ulp
    ev decimal(double v) const { return ev::rounded(v); }
    ev ln_uint(std::uint64_t v) const {
        return log(ev::exact(static_cast<double>(v)));
    }
};

struct BigCtx {
    using scalar = bigfloat;
    using ev = ErrVal<bigfloat>;

    HighPrecTheta& hp;
    const PrimeTable& primes;
    mpfr_prec_t prec;

    ev theta(std::size_t n) const { return hp.theta(n); }
    ev ln_prime(std::size_t n) const { return hp.ln_prime(n); }
    std::uint64_t prime(std::size_t n) const { return primes.nth(n); }
    ev exact(std::uint64_t v) const { return ev::exact(bigfloat::from_uint(v, prec)); }
    ev exact_real(double v) const { return ev::exact(bigfloat::from_double(v, prec)); }
    ev decimal(double v) const { return ev::rounded(bigfloat::from_double(v, prec)); }
    ev ln_uint(std::uint64_t v) const {
        return log(ev::exact(bigfloat::from_uint(v, prec)));
    }
};

}  // namespace thetaseq
