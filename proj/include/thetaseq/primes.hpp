// primes.hpp
// Segmented sieve of Eratosthenes and the prime table used by everything
// else: nth prime (1-based, p_1 = 2), pi(x), and ordinary prime gaps.
// Odd-only bitset segments of 2^20 bits keep the inner loop cache resident,
// so memory stays O(segment) while sieving; the finished table is an
// immutable sorted vector, safe for concurrent reads.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace thetaseq {

// Raised when a query needs data beyond the sieved/built range; the caller
// must rebuild with a larger limit.
class insufficient_table_error : public std::runtime_error {
public:
    explicit insufficient_table_error(const std::string& what)
        : std::runtime_error(what) {}
};

class PrimeTable {
public:
    // All primes <= limit, in order.
    static PrimeTable sieve(std::uint64_t limit) {
        if (limit < 2) throw std::domain_error("sieve: limit must be >= 2");
        PrimeTable t;
        t.limit_ = limit;
        t.primes_.reserve(limit > 100 ? static_cast<std::size_t>(
                              1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit)))
                                      : 32);
        t.primes_.push_back(2);

        const std::uint64_t root = isqrt(limit);
        const std::vector<std::uint64_t> base = simple_odd_sieve(root);

        constexpr std::uint64_t kSegmentBits = 1u << 20;   // odd numbers per segment
        constexpr std::uint64_t kSegmentSpan = kSegmentBits * 2;
        std::vector<std::uint64_t> bits(kSegmentBits / 64);

        for (std::uint64_t seg_lo = 3; seg_lo <= limit; seg_lo += kSegmentSpan) {
            const std::uint64_t seg_hi =
                std::min<std::uint64_t>(limit, seg_lo + kSegmentSpan - 2);  // inclusive, odd range
            std::fill(bits.begin(), bits.end(), ~0ull);

            for (std::uint64_t p : base) {
                std::uint64_t start = p * p;
                if (start > seg_hi) break;
                if (start < seg_lo) {
                    std::uint64_t k = (seg_lo + p - 1) / p;
                    if ((k & 1) == 0) ++k;      // odd multiples only
                    start = k * p;
                }
                for (std::uint64_t m = start; m <= seg_hi; m += 2 * p)
                    bits[(m - seg_lo) >> 7] &= ~(1ull << (((m - seg_lo) >> 1) & 63));
            }

            const std::uint64_t n_bits = (seg_hi - seg_lo) / 2 + 1;
            for (std::uint64_t w = 0; w * 64 < n_bits; ++w) {
                std::uint64_t word = bits[w];
                if ((w + 1) * 64 > n_bits)
                    word &= (~0ull >> (64 - (n_bits - w * 64)));
                while (word) {
                    const int b = std::countr_zero(word);
                    word &= word - 1;
                    t.primes_.push_back(seg_lo + ((w * 64 + static_cast<std::uint64_t>(b)) << 1));
                }
            }
        }
        return t;
    }

    // Adopt an externally produced ascending prime list (checkpoint reload).
    // The table can then serve queries up to its last prime.
    static PrimeTable from_sorted(std::vector<std::uint64_t> primes) {
        if (primes.empty() || primes.front() != 2)
            throw std::domain_error("from_sorted: list must start at 2");
        PrimeTable t;
        t.limit_ = primes.back();
        t.primes_ = std::move(primes);
        return t;
    }

    std::uint64_t limit() const { return limit_; }
    std::size_t count() const { return primes_.size(); }
    std::span<const std::uint64_t> all() const { return primes_; }

    // p_n, 1-based (p_1 = 2)
    std::uint64_t nth(std::size_t n) const {
        if (n < 1 || n > primes_.size())
            throw std::out_of_range("nth_prime: index " + std::to_string(n) +
                                    " outside table of " + std::to_string(primes_.size()));
        return primes_[n - 1];
    }

    // pi(x) = number of primes <= x; real argument is floored
    std::size_t pi(double x) const {
        if (x < 0) throw std::domain_error("prime_pi: negative argument");
        if (x > static_cast<double>(limit_))
            throw insufficient_table_error("prime_pi: argument beyond sieve limit; re-sieve");
        const auto fx = static_cast<std::uint64_t>(std::floor(x));
        auto it = std::upper_bound(primes_.begin(), primes_.end(), fx);
        return static_cast<std::size_t>(it - primes_.begin());
    }

    // g_n = p_{n+1} - p_n
    std::uint64_t gap(std::size_t n) const {
        if (n < 1 || n + 1 > primes_.size())
            throw std::out_of_range("prime_gap: need p_" + std::to_string(n + 1));
        return primes_[n] - primes_[n - 1];
    }

    // Rough but safe over-estimate of the sieve limit needed to hold the
    // first n primes (p_n < n(ln n + ln ln n) for n >= 6).
    static std::uint64_t limit_for_count(std::size_t n) {
        if (n < 6) return 16;
        const double nn = static_cast<double>(n);
        return static_cast<std::uint64_t>(nn * (std::log(nn) + std::log(std::log(nn))) + 64);
    }

private:
    static std::uint64_t isqrt(std::uint64_t n) {
        auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
        while (r > 0 && r * r > n) --r;
        while ((r + 1) * (r + 1) <= n) ++r;
        return r;
    }

    // plain odd sieve for the base primes up to sqrt(limit)
    static std::vector<std::uint64_t> simple_odd_sieve(std::uint64_t limit) {
        std::vector<std::uint64_t> out;
        if (limit < 3) return out;
        const std::uint64_t n = (limit - 1) / 2;  // count of odds 3,5,... <= limit
        std::vector<bool> composite(n + 1, false);
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::uint64_t p = 2 * i + 3;
            if (p * p > limit) break;
            if (composite[i]) continue;
            for (std::uint64_t m = p * p; m <= limit; m += 2 * p)
                composite[(m - 3) / 2] = true;
        }
        for (std::uint64_t i = 0; i < n; ++i)
            if (!composite[i]) out.push_back(2 * i + 3);
        return out;
    }

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

}  // namespace thetaseq
