// checkpoint.hpp
// Binary checkpoint so long scans restart without re-sieving:
//
//   bytes 0..3   magic "THV1"
//   u64 LE       prime count
//   varints      p_1 as a delta from 0, then the gaps p_{i+1} - p_i (LEB128)
//   u64 LE       theta record count
//   records      { u64 LE index, f64 LE value, f64 LE err }
//
// Theta records are written for every index when the table is small
// (<= 2^20 entries) and at a 2^20 stride plus the final index otherwise.
// On load the primes are reconstructed from the deltas, theta is rebuilt
// deterministically, and every stored record is cross-checked against the
// rebuilt value within the combined error bounds.

#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "thetaseq/chebyshev.hpp"
#include "thetaseq/primes.hpp"

namespace thetaseq {

class checkpoint_error : public std::runtime_error {
public:
    explicit checkpoint_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw checkpoint_error("checkpoint truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

inline void put_f64(std::ostream& os, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    put_u64(os, v);
}

inline double get_f64(std::istream& is) {
    const std::uint64_t v = get_u64(is);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

inline void put_varint(std::ostream& os, std::uint64_t v) {
    while (v >= 0x80) {
        os.put(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    os.put(static_cast<char>(v));
}

inline std::uint64_t get_varint(std::istream& is) {
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
        const int c = is.get();
        if (c == EOF) throw checkpoint_error("checkpoint truncated in varint");
        v |= static_cast<std::uint64_t>(c & 0x7f) << shift;
        if (!(c & 0x80)) return v;
        shift += 7;
        if (shift > 63) throw checkpoint_error("varint overflow");
    }
}

}  // namespace detail

constexpr std::size_t kThetaRecordStride = 1u << 20;

inline void write_checkpoint(const std::string& path, const PrimeTable& primes,
                             const ThetaTable& theta) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw checkpoint_error("cannot open checkpoint for writing: " + path);
    os.write("THV1", 4);
    detail::put_u64(os, primes.count());
    std::uint64_t prev = 0;
    for (std::uint64_t p : primes.all()) {
        detail::put_varint(os, p - prev);
        prev = p;
    }

    const std::size_t n = theta.n_max();
    std::vector<std::size_t> record_idx;
    if (n <= kThetaRecordStride) {
        record_idx.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) record_idx.push_back(i);
    } else {
        for (std::size_t i = kThetaRecordStride; i <= n; i += kThetaRecordStride)
            record_idx.push_back(i);
        if (record_idx.back() != n) record_idx.push_back(n);
    }
    detail::put_u64(os, record_idx.size());
    for (std::size_t i : record_idx) {
        detail::put_u64(os, i);
        detail::put_f64(os, theta.values()[i - 1]);
        detail::put_f64(os, theta.errors()[i - 1]);
    }
    if (!os) throw checkpoint_error("write failure on checkpoint: " + path);
}

struct LoadedTables {
    PrimeTable primes;
    ThetaTable theta;
};

inline LoadedTables read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw checkpoint_error("cannot open checkpoint: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "THV1", 4) != 0)
        throw checkpoint_error("bad checkpoint magic");
    const std::uint64_t count = detail::get_u64(is);
    std::vector<std::uint64_t> primes;
    primes.reserve(count);
    std::uint64_t cur = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        cur += detail::get_varint(is);
        primes.push_back(cur);
    }
    if (primes.empty() || primes.front() != 2)
        throw checkpoint_error("checkpoint does not start at p_1 = 2");

    LoadedTables out{PrimeTable::from_sorted(std::move(primes)), ThetaTable{}};
    out.theta = ThetaTable::build(out.primes, out.primes.count());

    const std::uint64_t n_rec = detail::get_u64(is);
    for (std::uint64_t r = 0; r < n_rec; ++r) {
        const std::uint64_t idx = detail::get_u64(is);
        const double value = detail::get_f64(is);
        const double err = detail::get_f64(is);
        if (idx < 1 || idx > out.theta.n_max())
            throw checkpoint_error("theta record index out of range");
        const Err rebuilt = out.theta.theta(idx);
        if (std::abs(rebuilt.value - value) > rebuilt.err + err)
            throw checkpoint_error("theta record mismatch at index " +
                                   std::to_string(idx));
    }
    return out;
}

}  // namespace thetaseq
