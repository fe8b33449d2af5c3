// chebyshev.hpp
// The sequence theta_n = sum_{i<=n} ln p_i, built once by compensated
// (two-term) summation with a running rigorous error bound, then queried
// as ErrVal.  Gaps ln p_{n+1} are computed on demand rather than stored.
//
// Error accounting for the build: each ln p_i contributes at most
// libm_factor ulps; the Kahn/Neumaier compensation makes the accumulated
// rounding of the additions themselves second-order (the compensation word
// is folded back into the value at every index, so only the rounding of the
// tiny low word and of the final value+compensation add enter the bound).
// The result grows ~linearly in n and stays below 1e-8 even at n ~ 4e6.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "thetaseq/errval.hpp"
#include "thetaseq/primes.hpp"

namespace thetaseq {

class ThetaTable {
public:
    static ThetaTable build(const PrimeTable& primes, std::size_t n_max) {
        if (n_max < 1) throw std::domain_error("build_theta: n_max must be >= 1");
        if (n_max > primes.count())
            throw insufficient_table_error("build_theta: prime table holds only " +
                                           std::to_string(primes.count()) + " primes");
        ThetaTable t;
        t.primes_ = &primes;
        t.value_.resize(n_max);
        t.err_.resize(n_max);

        double sum = 0.0;   // high word
        double comp = 0.0;  // compensation (low word)
        double bound = 0.0; // certified |value - true theta|
        for (std::size_t i = 0; i < n_max; ++i) {
            const double term = std::log(static_cast<double>(primes.nth(i + 1)));
            bound += scalar_model<double>::libm_factor * scalar_model<double>::eps_abs(term);

            // Neumaier two-sum
            const double s = sum + term;
            if (std::abs(sum) >= std::abs(term))
                comp += (sum - s) + term;
            else
                comp += (term - s) + sum;
            sum = s;
            bound += scalar_model<double>::eps_abs(comp);  // rounding of the low word

            const double v = sum + comp;
            t.value_[i] = v;
            t.err_[i] = bound + scalar_model<double>::eps_abs(v);
        }
        return t;
    }

    std::size_t n_max() const { return value_.size(); }
    const PrimeTable& primes() const { return *primes_; }

    // theta_n, 1-based
    Err theta(std::size_t n) const {
        check_range(n);
        return {value_[n - 1], err_[n - 1]};
    }

    // gap_n = theta_{n+1} - theta_n = ln p_{n+1}
    Err gap(std::size_t n) const {
        if (n < 1) throw std::out_of_range("theta_gap: n must be >= 1");
        const double lp = std::log(static_cast<double>(primes_->nth(n + 1)));
        return {lp, scalar_model<double>::libm_factor * scalar_model<double>::eps_abs(lp)};
    }

    // gap_n / theta_n
    Err relative_gap(std::size_t n) const { return gap(n) / theta(n); }

    // theta_n / p_n
    Err ratio_theta_over_p(std::size_t n) const {
        check_range(n);
        return theta(n) / Err::exact(static_cast<double>(primes_->nth(n)));
    }

    const std::vector<double>& values() const { return value_; }
    const std::vector<double>& errors() const { return err_; }

private:
    void check_range(std::size_t n) const {
        if (n < 1 || n > value_.size())
            throw std::out_of_range("theta: index " + std::to_string(n) +
                                    " outside table of " + std::to_string(value_.size()));
    }

    const PrimeTable* primes_ = nullptr;
    std::vector<double> value_;
    std::vector<double> err_;
};

}  // namespace thetaseq
