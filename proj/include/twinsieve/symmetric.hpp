#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinsieve/arith.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// Limits for the exact-rational path, where denominators grow as the product
// of all odd primes <= z.
struct RationalLimits {
    uint64_t warn_z = 10'000;  // warn when z > warn_z and t_max > warn_t
    int warn_t = 12;
    std::optional<uint64_t> hard_cap_z;  // refuse outright when set and exceeded
};

// f(0;z)..f(t_max;z): the elementary symmetric polynomials of the
// reciprocals of odd primes <= z. f(0;z) = 1 by convention; f(t;z) = 0
// exactly when t exceeds the number of odd primes <= z.
struct SymmetricSeries {
    uint64_t z = 0;
    int t_max = 0;
    Backend backend = Backend::Rational;
    std::size_t odd_prime_count = 0;
    bool resource_warning = false;

    std::vector<double> values;    // size t_max+1, double view of f(t;z)
    std::vector<Rational> exact;   // size t_max+1 iff backend == Rational

    double value(int t) const { return values.at(static_cast<std::size_t>(t)); }
    const Rational& exact_value(int t) const;
};

// Degree-by-degree dynamic program: each reciprocal 1/p is folded in once,
// updating f(t) += (1/p) f(t-1) from high t down.
SymmetricSeries esp_direct(uint64_t z, int t_max, Backend backend,
                           const RationalLimits& limits = {});

// Newton's identities: t e_t = sum_{i=1..t} (-1)^(i-1) e_(t-i) S_i.
// power_sums must cover k = 1..t_max at one z with one backend.
SymmetricSeries esp_via_newton(std::span<const PowerSum> power_sums, int t_max);

// Literal evaluation of f(t;z) = sum over odd primes p <= z of
// (1/p) f(t-1; p-1), memoized over the prefix triangle.
SymmetricSeries esp_recursive(uint64_t z, int t_max, Backend backend);

// L(z) = ln ln z plus the Mertens constants entering the leading-order form.
struct AsymptoticContext {
    double L;
    double M;
    double M_odd;

    explicit AsymptoticContext(double z);  // requires z > e
};

// Leading-order approximation (1/t!) (L(z) + M_odd)^t.
double leading_order_f(int t, const AsymptoticContext& ctx);

struct IdentityCheck {
    std::string name;
    double max_residual = 0.0;
    bool pass = false;
};

struct IdentityReport {
    uint64_t z = 0;
    int t_max = 0;
    Backend backend = Backend::Rational;
    double tolerance = 0.0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
    double max_residual() const;
};

// Verifies 2 f(2;z) = S_1^2 - S_2, agreement of the three evaluation routes
// for all t <= t_max, and the zero tail past the odd-prime count. Failures
// are report contents, never exceptions.
IdentityReport check_identities(uint64_t z, int t_max, double tolerance, Backend backend);

}  // namespace twinsieve
