// bitarray.hpp
// Flat bit array over 64-bit words, with the word-parallel primitives the
// membership DP and the prime pair searches are built on:
//
//   or_shift_closure(s)  -  in-place closure of  bits |= bits << s,
//                           identical to the scalar reachability loop
//                           for (m = s; m < size; ++m) b[m] |= b[m-s]
//   any/count_pair_offset -  scan w in [lo,hi] for this[w] && other[w+off],
//                           64 positions per AND

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace primesg {

class BitArray {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitArray() = default;
    explicit BitArray(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    // bits |= bits << s, applied to a fixed point. Words are processed in
    // ascending order so updated words feed later ones, matching the scalar
    // loop; shifts smaller than a word additionally need the in-word
    // doubling closure.
    void or_shift_closure(std::size_t s) {
        assert(s >= 1);
        if (s >= nbits_) return;
        const std::size_t nw = w_.size();
        const std::size_t wq = s >> 6;
        const unsigned br = static_cast<unsigned>(s & 63);
        if (wq == 0) {
            for (std::size_t i = 0; i < nw; ++i) {
                std::uint64_t x = w_[i];
                if (i > 0) x |= w_[i - 1] >> (64 - br);
                for (unsigned step = br; step < 64; step <<= 1) x |= x << step;
                w_[i] = x;
            }
        } else if (br == 0) {
            for (std::size_t i = wq; i < nw; ++i) w_[i] |= w_[i - wq];
        } else {
            for (std::size_t i = wq; i < nw; ++i) {
                std::uint64_t add = w_[i - wq] << br;
                if (i > wq) add |= w_[i - wq - 1] >> (64 - br);
                w_[i] |= add;
            }
        }
        mask_tail();
    }

    // True if some w in [lo, hi] has this[w] and other[w + off] set.
    bool any_pair_offset(const BitArray& other, std::size_t off, std::size_t lo,
                         std::size_t hi) const {
        if (lo > hi || lo >= nbits_) return false;
        if (hi >= nbits_) hi = nbits_ - 1;
        const std::size_t klo = lo >> 6, khi = hi >> 6;
        for (std::size_t k = klo; k <= khi; ++k) {
            std::uint64_t m = masked_word(k, lo, hi, klo, khi);
            if (m && (m & other.window64(k * 64 + off))) return true;
        }
        return false;
    }

    // Number of w in [lo, hi] with this[w] and other[w + off] set.
    std::size_t count_pair_offset(const BitArray& other, std::size_t off, std::size_t lo,
                                  std::size_t hi) const {
        if (lo > hi || lo >= nbits_) return 0;
        if (hi >= nbits_) hi = nbits_ - 1;
        std::size_t cnt = 0;
        const std::size_t klo = lo >> 6, khi = hi >> 6;
        for (std::size_t k = klo; k <= khi; ++k) {
            std::uint64_t m = masked_word(k, lo, hi, klo, khi);
            if (m) cnt += static_cast<std::size_t>(std::popcount(m & other.window64(k * 64 + off)));
        }
        return cnt;
    }

    // Set bits in [lo, hi].
    std::size_t count_range(std::size_t lo, std::size_t hi) const {
        if (lo > hi || lo >= nbits_) return 0;
        if (hi >= nbits_) hi = nbits_ - 1;
        std::size_t cnt = 0;
        const std::size_t klo = lo >> 6, khi = hi >> 6;
        for (std::size_t k = klo; k <= khi; ++k)
            cnt += static_cast<std::size_t>(std::popcount(masked_word(k, lo, hi, klo, khi)));
        return cnt;
    }

    std::size_t find_lowest_set(std::size_t lo = 0) const {
        if (lo >= nbits_) return npos;
        std::size_t k = lo >> 6;
        std::uint64_t x = w_[k] & (~std::uint64_t{0} << (lo & 63));
        for (;;) {
            if (x) return (k << 6) + static_cast<std::size_t>(std::countr_zero(x));
            if (++k >= w_.size()) return npos;
            x = w_[k];
        }
    }

    std::size_t find_highest_zero(std::size_t hi) const {
        if (nbits_ == 0) return npos;
        if (hi >= nbits_) hi = nbits_ - 1;
        std::size_t k = hi >> 6;
        std::uint64_t x = ~w_[k];
        if ((hi & 63) != 63) x &= (std::uint64_t{1} << ((hi & 63) + 1)) - 1;
        for (;;) {
            if (x) return (k << 6) + (63 - static_cast<std::size_t>(std::countl_zero(x)));
            if (k == 0) return npos;
            x = ~w_[--k];
        }
    }

    // Bit j of the result equals bit (top - j) of this array.
    BitArray reversed(std::size_t top) const {
        assert(top < nbits_);
        BitArray r(top + 1);
        for (std::size_t j = 0; j <= top; ++j)
            if (test(top - j)) r.w_[j >> 6] |= std::uint64_t{1} << (j & 63);
        return r;
    }

    bool operator==(const BitArray&) const = default;

private:
    // 64 bits of this array starting at global bit position pos; positions
    // past the end read as zero (tail bits of the last word are kept zero).
    std::uint64_t window64(std::size_t pos) const {
        const std::size_t ww = pos >> 6;
        const unsigned bb = static_cast<unsigned>(pos & 63);
        std::uint64_t v = 0;
        if (ww < w_.size()) v = w_[ww] >> bb;
        if (bb != 0 && ww + 1 < w_.size()) v |= w_[ww + 1] << (64 - bb);
        return v;
    }

    std::uint64_t masked_word(std::size_t k, std::size_t lo, std::size_t hi, std::size_t klo,
                              std::size_t khi) const {
        std::uint64_t m = w_[k];
        if (k == klo) m &= ~std::uint64_t{0} << (lo & 63);
        if (k == khi && (hi & 63) != 63) m &= (std::uint64_t{1} << ((hi & 63) + 1)) - 1;
        return m;
    }

    void mask_tail() {
        if (nbits_ & 63) w_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace primesg
