// primes.hpp
// Prime number services: segmented sieve of Eratosthenes, pi(x), p(n) and
// range queries, exact up to the sieve limit.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primesg/bitarray.hpp"
#include "primesg/arith.hpp"

namespace primesg {

// Immutable sieve result: membership bits for 0..limit, the ordered prime
// list, and checkpointed counts so pi(x) needs only a short word scan.
// Safe for shared concurrent reads after construction.
class PrimeTable {
public:
    static constexpr std::int64_t kPiStride = 4096;

    std::int64_t limit() const { return limit_; }
    const std::vector<std::int64_t>& prime_list() const { return primes_; }
    const BitArray& bits() const { return bits_; }

    bool is_prime(std::int64_t x) const {
        if (x < 0 || x > limit_)
            throw std::out_of_range("is_prime: x=" + std::to_string(x) + " outside sieve limit " +
                                    std::to_string(limit_));
        return bits_.test(static_cast<std::size_t>(x));
    }

    // p(n), 1-based: nth_prime(1) = 2.
    std::int64_t nth_prime(std::int64_t n) const {
        if (n < 1 || n > static_cast<std::int64_t>(primes_.size()))
            throw std::out_of_range("nth_prime: n=" + std::to_string(n) +
                                    " outside table with " + std::to_string(primes_.size()) +
                                    " primes (re-sieve larger)");
        return primes_[static_cast<std::size_t>(n - 1)];
    }

    // Number of primes <= x.
    std::int64_t prime_pi(std::int64_t x) const {
        if (x < 0 || x > limit_)
            throw std::out_of_range("prime_pi: x=" + std::to_string(x) +
                                    " outside sieve limit " + std::to_string(limit_));
        const std::int64_t k = x / kPiStride;
        return pi_checkpoint_[static_cast<std::size_t>(k)] +
               static_cast<std::int64_t>(bits_.count_range(static_cast<std::size_t>(k * kPiStride),
                                                           static_cast<std::size_t>(x)));
    }

    // Ascending primes q with lo <= q <= hi, as a view into the prime list.
    std::span<const std::int64_t> prime_span(std::int64_t lo, std::int64_t hi) const {
        if (lo < 0 || lo > hi || hi > limit_)
            throw std::out_of_range("prime range [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "] invalid for sieve limit " +
                                    std::to_string(limit_));
        const auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
        const auto last = std::upper_bound(first, primes_.end(), hi);
        return {first, last};
    }

    std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) const {
        const auto s = prime_span(lo, hi);
        return {s.begin(), s.end()};
    }

private:
    friend PrimeTable sieve(std::int64_t);

    std::int64_t limit_ = 0;
    BitArray bits_;
    std::vector<std::int64_t> primes_;
    std::vector<std::int64_t> pi_checkpoint_; // pi_checkpoint_[k] = #primes < k*kPiStride
};

inline PrimeTable sieve(std::int64_t limit) {
    if (limit < 2) throw std::domain_error("sieve: limit must be >= 2");

    PrimeTable t;
    t.limit_ = limit;
    t.bits_ = BitArray(static_cast<std::size_t>(limit) + 1);

    // base primes up to sqrt(limit)
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(limit)));
    std::vector<char> base(static_cast<std::size_t>(root) + 1, 1);
    std::vector<std::int64_t> base_primes;
    for (std::int64_t i = 2; i <= root; ++i) {
        if (!base[static_cast<std::size_t>(i)]) continue;
        base_primes.push_back(i);
        for (std::int64_t m = i * i; m <= root; m += i) base[static_cast<std::size_t>(m)] = 0;
    }

    constexpr std::int64_t kSegment = 1 << 18;
    std::vector<char> mark(static_cast<std::size_t>(kSegment));
    for (std::int64_t lo = 2; lo <= limit; lo += kSegment) {
        const std::int64_t hi = std::min(lo + kSegment - 1, limit);
        std::fill(mark.begin(), mark.begin() + static_cast<std::size_t>(hi - lo + 1), 1);
        for (const std::int64_t bp : base_primes) {
            if (bp * bp > hi) break;
            std::int64_t start = std::max(bp * bp, ((lo + bp - 1) / bp) * bp);
            for (std::int64_t m = start; m <= hi; m += bp) mark[static_cast<std::size_t>(m - lo)] = 0;
        }
        for (std::int64_t m = lo; m <= hi; ++m) {
            if (!mark[static_cast<std::size_t>(m - lo)]) continue;
            t.bits_.set(static_cast<std::size_t>(m));
            t.primes_.push_back(m);
        }
    }

    t.pi_checkpoint_.assign(static_cast<std::size_t>(limit / PrimeTable::kPiStride) + 1, 0);
    std::size_t idx = 0;
    for (std::size_t k = 1; k < t.pi_checkpoint_.size(); ++k) {
        const std::int64_t edge = static_cast<std::int64_t>(k) * PrimeTable::kPiStride;
        while (idx < t.primes_.size() && t.primes_[idx] < edge) ++idx;
        t.pi_checkpoint_[k] = static_cast<std::int64_t>(idx);
    }
    return t;
}

// Sieve limit sufficient for semigroup windows up to 6*p(n_hi), using the
// p(n) < n(ln n + ln ln n) bound (valid for n >= 6) with padding.
inline std::int64_t sieve_limit_for_n(std::int64_t n_hi) {
    const double n = static_cast<double>(std::max<std::int64_t>(n_hi, 6));
    const double est = n * (std::log(n) + std::log(std::log(n)));
    return std::max<std::int64_t>(6 * (static_cast<std::int64_t>(est) + 16), 128);
}

} // namespace primesg
