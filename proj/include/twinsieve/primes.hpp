#pragma once

#include <cstdint>
#include <vector>

#include "twinsieve/arith.hpp"

namespace twinsieve {

struct SieveOptions {
    // Refuse to sieve past this bound; large runs stay segmented below it.
    uint64_t limit_cap = 10'000'000'000ULL;
    // Segment length in odd numbers. 1<<18 odds = 32 KiB of flags per segment.
    uint64_t segment_odds = uint64_t{1} << 18;
};

// Primes up to a fixed bound. Internally an odd-only bitmap (bit j <=> 2j+1
// prime); prime 2 is implied by limit >= 2. Immutable once built.
class PrimeTable {
public:
    PrimeTable() = default;

    uint64_t limit() const { return limit_; }
    std::size_t count() const { return count_; }

    bool contains(uint64_t n) const {
        if (n > limit_ || n < 2) return false;
        if (n == 2) return true;
        if (n % 2 == 0) return false;
        const uint64_t j = n >> 1;
        return (words_[j >> 6] >> (j & 63)) & 1;
    }

    // Ascending sequence of all primes <= limit.
    std::vector<uint64_t> primes() const;

    template <class Fn>
    void for_each_prime(Fn&& fn) const {
        if (limit_ >= 2) fn(uint64_t{2});
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                w &= w - 1;
                fn((uint64_t(wi) * 64 + uint64_t(b)) * 2 + 1);
            }
        }
    }

    // Odd-prime bitmap words, for bulk scans (twin counting).
    const std::vector<uint64_t>& words() const { return words_; }

    bool operator==(const PrimeTable& other) const {
        return limit_ == other.limit_ && words_ == other.words_;
    }

private:
    uint64_t limit_ = 0;
    std::size_t count_ = 0;
    std::vector<uint64_t> words_;

    friend PrimeTable sieve_primes(uint64_t, const SieveOptions&);
};

// Segmented sieve of Eratosthenes. Deterministic; throws resource_error when
// limit exceeds opt.limit_cap.
PrimeTable sieve_primes(uint64_t limit, const SieveOptions& opt = {});

// Number of primes p <= x with p+2 also prime (p+2 may exceed x).
uint64_t count_twin_primes(uint64_t x, const SieveOptions& opt = {});

// Same, scanning a prebuilt table; requires table.limit() >= x+2.
uint64_t count_twin_primes(const PrimeTable& table, uint64_t x);

// Primes p with 3 <= p <= z, ascending; empty when z < 3.
std::vector<uint64_t> odd_primes_up_to(uint64_t z, const SieveOptions& opt = {});

// S_k(z) = sum over odd primes p <= z of p^(-k).
struct PowerSum {
    unsigned k = 1;
    uint64_t z = 0;
    Backend backend = Backend::Rational;
    Rational exact;       // meaningful iff backend == Rational
    double approx = 0.0;  // double view, always set

    double value() const { return approx; }
};

PowerSum power_sum(unsigned k, uint64_t z, Backend backend = Backend::Rational,
                   const SieveOptions& opt = {});

// S_1..S_k_max at the same z, sharing one sieve pass.
std::vector<PowerSum> power_sums_up_to(unsigned k_max, uint64_t z, Backend backend,
                                       const SieveOptions& opt = {});

}  // namespace twinsieve
