#include "twinsieve/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd base primes up to `limit` by a plain odd-only sieve. Used for the base
// primes of the segmented sieve (limit <= sqrt of the full bound).
std::vector<uint64_t> base_odd_primes(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 3) return out;
    const uint64_t half = (limit - 1) / 2;  // j in [1, half] <=> odd 3..limit
    std::vector<char> composite(half + 1, 0);
    for (uint64_t j = 1; j <= half; ++j) {
        if (composite[j]) continue;
        const uint64_t p = 2 * j + 1;
        out.push_back(p);
        if (p * p > limit) continue;
        for (uint64_t m = (p * p) >> 1; m <= half; m += p) composite[m] = 1;
    }
    return out;
}

}  // namespace

std::vector<uint64_t> PrimeTable::primes() const {
    std::vector<uint64_t> out;
    out.reserve(count_);
    for_each_prime([&](uint64_t p) { out.push_back(p); });
    return out;
}

PrimeTable sieve_primes(uint64_t limit, const SieveOptions& opt) {
    if (limit > opt.limit_cap)
        throw resource_error("sieve_primes: limit " + std::to_string(limit) +
                             " exceeds configured cap " + std::to_string(opt.limit_cap));

    PrimeTable table;
    table.limit_ = limit;
    if (limit < 2) return table;

    const uint64_t jmax = (limit - 1) >> 1;  // odd n = 2j+1 <= limit, j=0 is n=1
    table.words_.assign(jmax / 64 + 1, ~uint64_t{0});
    auto clear_bit = [&](uint64_t j) { table.words_[j >> 6] &= ~(uint64_t{1} << (j & 63)); };

    clear_bit(0);  // 1 is not prime
    // Trim bits past jmax so popcounts and comparisons see a canonical tail.
    if ((jmax & 63) != 63)
        table.words_.back() &= (uint64_t{1} << ((jmax & 63) + 1)) - 1;

    const auto base = base_odd_primes(isqrt_u64(limit));
    const uint64_t seg = std::max<uint64_t>(opt.segment_odds, 64);

    for (uint64_t lo = 0; lo <= jmax; lo += seg) {
        const uint64_t hi = std::min(jmax, lo + seg - 1);
        for (uint64_t p : base) {
            // first composite odd multiple of p at index >= lo, starting at p^2
            uint64_t m = (p * p) >> 1;  // index of p^2 (odd)
            if (m < lo) {
                // smallest index >= lo congruent to m mod p
                m += ((lo - m) + p - 1) / p * p;
            }
            for (; m <= hi; m += p) clear_bit(m);
        }
    }

    std::size_t odd_count = 0;
    for (uint64_t w : table.words_) odd_count += std::popcount(w);
    table.count_ = odd_count + 1;  // + prime 2
    return table;
}

uint64_t count_twin_primes(const PrimeTable& table, uint64_t x) {
    if (x < 2) throw std::invalid_argument("count_twin_primes: x must be >= 2");
    if (table.limit() < x + 2)
        throw std::invalid_argument("count_twin_primes: table limit " +
                                    std::to_string(table.limit()) + " < x+2 = " +
                                    std::to_string(x + 2));
    if (x < 3) return 0;

    // Twin starts are odd: count j in [1, jmax] with bits j and j+1 both set.
    const uint64_t jmax = (x - 1) / 2;
    const auto& words = table.words();
    const std::size_t wmax = jmax / 64;
    uint64_t count = 0;
    for (std::size_t wi = 0; wi <= wmax; ++wi) {
        const uint64_t w = words[wi];
        const uint64_t next = (wi + 1 < words.size()) ? words[wi + 1] : 0;
        uint64_t pair = w & ((w >> 1) | (next << 63));
        if (wi == wmax && (jmax & 63) != 63)
            pair &= (uint64_t{1} << ((jmax & 63) + 1)) - 1;
        count += std::popcount(pair);
    }
    return count;
}

uint64_t count_twin_primes(uint64_t x, const SieveOptions& opt) {
    if (x < 2) throw std::invalid_argument("count_twin_primes: x must be >= 2");
    if (x + 2 > opt.limit_cap)
        throw resource_error("count_twin_primes: x = " + std::to_string(x) +
                             " needs a sieve to x+2, above configured cap " +
                             std::to_string(opt.limit_cap));
    return count_twin_primes(sieve_primes(x + 2, opt), x);
}

std::vector<uint64_t> odd_primes_up_to(uint64_t z, const SieveOptions& opt) {
    std::vector<uint64_t> out;
    if (z < 3) return out;
    sieve_primes(z, opt).for_each_prime([&](uint64_t p) {
        if (p >= 3) out.push_back(p);
    });
    return out;
}

namespace {

// p^k as an exact integer (GMP, no overflow concerns).
mpz_class ipow(uint64_t p, unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
    return r;
}

double ipow_double(uint64_t p, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<double>(p);
    return r;
}

}  // namespace

std::vector<PowerSum> power_sums_up_to(unsigned k_max, uint64_t z, Backend backend,
                                       const SieveOptions& opt) {
    if (k_max == 0) throw std::invalid_argument("power_sums_up_to: k_max must be >= 1");
    const auto odd = odd_primes_up_to(z, opt);

    std::vector<PowerSum> out(k_max);
    for (unsigned k = 1; k <= k_max; ++k) out[k - 1] = PowerSum{k, z, backend, Rational(0), 0.0};

    if (backend == Backend::Rational) {
        for (uint64_t p : odd) {
            mpz_class pk{static_cast<unsigned long>(p)};
            for (unsigned k = 1; k <= k_max; ++k) {
                out[k - 1].exact += Rational(1) / Rational(pk);
                if (k < k_max) pk *= static_cast<unsigned long>(p);
            }
        }
        for (auto& s : out) s.approx = to_double(s.exact);
    } else {
        std::vector<Compensated> acc(k_max);
        for (uint64_t p : odd)
            for (unsigned k = 1; k <= k_max; ++k) acc[k - 1] += 1.0 / ipow_double(p, k);
        for (unsigned k = 1; k <= k_max; ++k) out[k - 1].approx = acc[k - 1].value();
    }
    return out;
}

PowerSum power_sum(unsigned k, uint64_t z, Backend backend, const SieveOptions& opt) {
    if (k == 0) throw std::invalid_argument("power_sum: k must be >= 1");
    PowerSum out{k, z, backend, Rational(0), 0.0};
    const auto odd = odd_primes_up_to(z, opt);
    if (backend == Backend::Rational) {
        for (uint64_t p : odd) out.exact += Rational(1) / Rational(ipow(p, k));
        out.approx = to_double(out.exact);
    } else {
        Compensated acc;
        for (uint64_t p : odd) acc += 1.0 / ipow_double(p, k);
        out.approx = acc.value();
    }
    return out;
}

}  // namespace twinsieve
