// semigroup.hpp
// The numerical semigroup S(n) generated by all primes >= p(n), computed on
// a finite window.
//
// Window soundness: a member m <= bound can only use generator primes <= m,
// so membership on [0, bound] computed from the primes in [p, bound] is
// exact. Once the largest non-member f satisfies f + p <= bound, the window
// contains p consecutive members above f and every integer beyond the window
// is a member as well; f is then the true Frobenius number. The initial
// window 6p keeps that margin whenever f < 4p, which the assertion sweep
// checks for every computed n.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primesg/bitarray.hpp"
#include "primesg/primes.hpp"

namespace primesg {

struct SemigroupInstance {
    std::int64_t n = 0;     // p = p(n)
    std::int64_t p = 0;     // multiplicity
    std::int64_t bound = 0; // membership computed on [0, bound]
    BitArray member;
    std::int64_t frobenius = 0;
    std::int64_t genus = 0;
    std::int64_t sporadic = 0;
    std::vector<std::int64_t> atoms;
    std::int64_t embedding_dim = 0;
    std::int64_t largest_atom = 0;
    std::int64_t multiplicity = 0; // smallest positive member; must equal p
};

inline bool is_member(const SemigroupInstance& s, std::int64_t m) {
    if (m < 0) throw std::domain_error("is_member: m must be >= 0");
    if (m > s.bound) return true; // bound >= frobenius + p, so m > frobenius
    return s.member.test(static_cast<std::size_t>(m));
}

// Atoms of the semigroup given its membership bits and generator list: a
// generator q is decomposable iff q = w + v with positive members w, v, both
// necessarily in [p, q-p]. The scan pairs the bits with their reversal so
// each candidate costs one masked AND per word.
inline std::vector<std::int64_t> atoms_from_membership(const BitArray& member,
                                                       std::span<const std::int64_t> generators) {
    std::vector<std::int64_t> atoms;
    if (generators.empty()) return atoms;
    const std::size_t top = member.size() - 1;
    const BitArray rev = member.reversed(top);
    const std::int64_t p = generators.front();
    for (const std::int64_t q : generators) {
        const std::int64_t lo = p, hi = q - p;
        const bool decomposable =
            lo <= hi && member.any_pair_offset(rev, top - static_cast<std::size_t>(q),
                                               static_cast<std::size_t>(lo),
                                               static_cast<std::size_t>(hi));
        if (!decomposable) atoms.push_back(q);
    }
    return atoms;
}

inline SemigroupInstance build(std::int64_t n, const PrimeTable& table) {
    if (n < 1) throw std::domain_error("build: n must be >= 1");
    const std::int64_t p = table.nth_prime(n);

    std::int64_t bound = 6 * p;
    for (;;) {
        if (bound > table.limit())
            throw std::out_of_range("build: window [0," + std::to_string(bound) +
                                    "] for n=" + std::to_string(n) + " exceeds sieve limit " +
                                    std::to_string(table.limit()));
        const auto generators = table.prime_span(p, bound);

        SemigroupInstance s;
        s.n = n;
        s.p = p;
        s.bound = bound;
        s.member = BitArray(static_cast<std::size_t>(bound) + 1);
        s.member.set(0);
        for (const std::int64_t q : generators)
            s.member.or_shift_closure(static_cast<std::size_t>(q));

        // 1 is never a member, so a largest non-member exists.
        const std::size_t fz = s.member.find_highest_zero(static_cast<std::size_t>(bound));
        s.frobenius = static_cast<std::int64_t>(fz);
        if (s.frobenius + p > bound) { // window too small for a sound Frobenius number
            bound *= 2;
            continue;
        }

        s.genus = s.frobenius - static_cast<std::int64_t>(s.member.count_range(
                                    1, static_cast<std::size_t>(s.frobenius)));
        s.sporadic = s.frobenius + 1 - s.genus;
        s.atoms = atoms_from_membership(s.member, generators);
        s.embedding_dim = static_cast<std::int64_t>(s.atoms.size());
        s.largest_atom = s.atoms.back();
        s.multiplicity = static_cast<std::int64_t>(s.member.find_lowest_set(1));
        return s;
    }
}

inline std::vector<std::int64_t> compute_atoms(const SemigroupInstance& s,
                                               const PrimeTable& table) {
    return atoms_from_membership(s.member, table.prime_span(s.p, s.bound));
}

namespace oracle_detail {

inline bool trial_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline bool sum_of_primes_from(std::int64_t m, std::int64_t q_min) {
    if (m == 0) return true;
    for (std::int64_t q = q_min; q <= m; ++q)
        if (trial_prime(q) && sum_of_primes_from(m - q, q)) return true;
    return false;
}

} // namespace oracle_detail

// Brute-force membership: is m a sum (possibly empty) of primes >= p?
// Exhaustive recursion over non-decreasing prime summands with trial-division
// primality; shares no code with build(). Intended for small arguments.
inline bool oracle_membership(std::int64_t m, std::int64_t p) {
    if (m < 0) return false;
    return oracle_detail::sum_of_primes_from(m, p);
}

// Largest atom without the membership DP. For p > 2, an odd prime q with
// p <= q < 5p is decomposable iff it is a sum of three primes >= p: a
// decomposition into two positive members splits into k >= 2 odd prime
// summands, k = 2 and k = 4 are even, and k = 5 needs q >= 5p. Primes below
// 3p are therefore always atoms. Assumes f < 4p (so u < f + p < 5p), which
// holds for every n the assertion sweep has checked.
inline std::int64_t largest_atom_fast(std::int64_t n, const PrimeTable& table) {
    if (n < 2) throw std::domain_error("largest_atom_fast: requires p > 2 (n >= 2)");
    const std::int64_t p = table.nth_prime(n);
    if (5 * p > table.limit())
        throw std::out_of_range("largest_atom_fast: needs sieve limit >= 5*p = " +
                                std::to_string(5 * p));
    const std::size_t top = static_cast<std::size_t>(table.limit());
    const BitArray rev = table.bits().reversed(top);

    const auto candidates = table.prime_span(3 * p, 5 * p - 1);
    for (std::size_t i = candidates.size(); i-- > 0;) {
        const std::int64_t q = candidates[i];
        bool decomposable = false;
        for (const std::int64_t q1 : table.prime_span(p, q / 3)) {
            const std::int64_t rest = q - q1;
            if (table.bits().any_pair_offset(rev, top - static_cast<std::size_t>(rest),
                                             static_cast<std::size_t>(q1),
                                             static_cast<std::size_t>(rest / 2))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) return q;
    }
    // everything in [3p, 5p) decomposed: the largest atom is the largest prime below 3p
    const auto below = table.prime_span(p, 3 * p - 1);
    return below.back();
}

} // namespace primesg
