#include "twinsieve/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "twinsieve/constants.hpp"
#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

SymmetricSeries make_series(uint64_t z, int t_max, Backend backend, std::size_t odd_count) {
    SymmetricSeries s;
    s.z = z;
    s.t_max = t_max;
    s.backend = backend;
    s.odd_prime_count = odd_count;
    s.values.assign(static_cast<std::size_t>(t_max) + 1, 0.0);
    if (backend == Backend::Rational)
        s.exact.assign(static_cast<std::size_t>(t_max) + 1, Rational(0));
    return s;
}

void fill_double_view(SymmetricSeries& s) {
    for (std::size_t t = 0; t < s.exact.size(); ++t) s.values[t] = to_double(s.exact[t]);
}

// Entries past the number of variables are identically zero; enforce so the
// float Newton route cannot leave cancellation dust in the tail.
void clamp_tail(SymmetricSeries& s) {
    for (std::size_t t = s.odd_prime_count + 1; t < s.values.size(); ++t) {
        s.values[t] = 0.0;
        if (!s.exact.empty()) s.exact[t] = 0;
    }
}

void check_rational_limits(uint64_t z, int t_max, const RationalLimits& limits,
                           SymmetricSeries& s) {
    if (limits.hard_cap_z && z > *limits.hard_cap_z)
        throw resource_error("esp: rational backend refused for z = " + std::to_string(z) +
                             " (hard cap " + std::to_string(*limits.hard_cap_z) + ")");
    if (z > limits.warn_z && t_max > limits.warn_t) {
        s.resource_warning = true;
        std::cerr << "twinsieve: warning: exact-rational series at z = " << z
                  << ", t_max = " << t_max << " has denominators near the primorial of z;"
                  << " expect heavy memory use\n";
    }
}

}  // namespace

const Rational& SymmetricSeries::exact_value(int t) const {
    if (backend != Backend::Rational)
        throw std::logic_error("SymmetricSeries: exact values only exist under the rational backend");
    return exact.at(static_cast<std::size_t>(t));
}

SymmetricSeries esp_direct(uint64_t z, int t_max, Backend backend,
                           const RationalLimits& limits) {
    if (t_max < 0) throw std::invalid_argument("esp_direct: t_max must be >= 0");
    const auto odd = odd_primes_up_to(z);
    auto s = make_series(z, t_max, backend, odd.size());

    if (backend == Backend::Rational) {
        check_rational_limits(z, t_max, limits, s);
        s.exact[0] = 1;
        int seen = 0;
        for (uint64_t p : odd) {
            ++seen;
            const Rational r(1, static_cast<unsigned long>(p));
            for (int t = std::min(t_max, seen); t >= 1; --t)
                s.exact[t] += r * s.exact[t - 1];
        }
        fill_double_view(s);
    } else {
        std::vector<Compensated> acc(static_cast<std::size_t>(t_max) + 1);
        acc[0] = Compensated(1.0);
        int seen = 0;
        for (uint64_t p : odd) {
            ++seen;
            const double r = 1.0 / static_cast<double>(p);
            for (int t = std::min(t_max, seen); t >= 1; --t)
                acc[t] += r * acc[t - 1].value();
        }
        for (int t = 0; t <= t_max; ++t) s.values[t] = acc[t].value();
    }
    clamp_tail(s);
    return s;
}

SymmetricSeries esp_via_newton(std::span<const PowerSum> power_sums, int t_max) {
    if (t_max < 0) throw std::invalid_argument("esp_via_newton: t_max must be >= 0");
    if (static_cast<int>(power_sums.size()) < t_max)
        throw std::invalid_argument("esp_via_newton: need power sums for k = 1.." +
                                    std::to_string(t_max));
    for (int k = 1; k <= t_max; ++k) {
        const auto& ps = power_sums[static_cast<std::size_t>(k - 1)];
        if (ps.k != static_cast<unsigned>(k))
            throw std::invalid_argument("esp_via_newton: power sums must be ordered k = 1..t_max");
        if (ps.z != power_sums[0].z || ps.backend != power_sums[0].backend)
            throw std::invalid_argument("esp_via_newton: power sums mix z or backend");
    }

    const uint64_t z = power_sums.empty() ? 0 : power_sums[0].z;
    const Backend backend = power_sums.empty() ? Backend::Rational : power_sums[0].backend;
    auto s = make_series(z, t_max, backend, odd_primes_up_to(z).size());

    if (backend == Backend::Rational) {
        s.exact[0] = 1;
        for (int t = 1; t <= t_max; ++t) {
            Rational acc(0);
            for (int i = 1; i <= t; ++i) {
                const Rational term = s.exact[t - i] * power_sums[i - 1].exact;
                acc += (i % 2 == 1) ? term : -term;
            }
            s.exact[t] = acc / t;
        }
        fill_double_view(s);
    } else {
        s.values[0] = 1.0;
        for (int t = 1; t <= t_max; ++t) {
            Compensated acc;
            for (int i = 1; i <= t; ++i) {
                const double term = s.values[t - i] * power_sums[i - 1].approx;
                acc += (i % 2 == 1) ? term : -term;
            }
            s.values[t] = acc.value() / t;
        }
    }
    clamp_tail(s);
    return s;
}

SymmetricSeries esp_recursive(uint64_t z, int t_max, Backend backend) {
    if (t_max < 0) throw std::invalid_argument("esp_recursive: t_max must be >= 0");
    const auto odd = odd_primes_up_to(z);
    const std::size_t m = odd.size();
    auto s = make_series(z, t_max, backend, m);

    // row[t][i] = f(t; q_i - 1) over the first i odd primes; f(t;z) is the
    // same sum taken over all m of them. Each entry evaluates the recursion
    // literally rather than reusing the prefix next door.
    if (backend == Backend::Rational) {
        std::vector<Rational> prev(m + 1, Rational(1));  // t = 0
        s.exact[0] = 1;
        std::vector<Rational> cur(m + 1);
        for (int t = 1; t <= t_max; ++t) {
            for (std::size_t i = 0; i <= m; ++i) {
                Rational acc(0);
                for (std::size_t j = 1; j <= i; ++j)
                    acc += Rational(1, static_cast<unsigned long>(odd[j - 1])) * prev[j - 1];
                cur[i] = acc;
            }
            s.exact[t] = cur[m];
            std::swap(prev, cur);
        }
        fill_double_view(s);
    } else {
        std::vector<double> prev(m + 1, 1.0);
        s.values[0] = 1.0;
        std::vector<double> cur(m + 1);
        for (int t = 1; t <= t_max; ++t) {
            for (std::size_t i = 0; i <= m; ++i) {
                Compensated acc;
                for (std::size_t j = 1; j <= i; ++j)
                    acc += prev[j - 1] / static_cast<double>(odd[j - 1]);
                cur[i] = acc.value();
            }
            s.values[t] = cur[m];
            std::swap(prev, cur);
        }
    }
    clamp_tail(s);
    return s;
}

AsymptoticContext::AsymptoticContext(double z) {
    if (!(z > std::exp(1.0)))
        throw std::domain_error("AsymptoticContext: requires z > e so that ln ln z is defined");
    L = std::log(std::log(z));
    M = kMeisselMertens;
    M_odd = kMeisselMertensOdd;
}

double leading_order_f(int t, const AsymptoticContext& ctx) {
    if (t < 0) throw std::invalid_argument("leading_order_f: t must be >= 0");
    double factorial = 1.0;
    for (int i = 2; i <= t; ++i) factorial *= i;
    return std::pow(ctx.L + ctx.M_odd, t) / factorial;
}

bool IdentityReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.pass; });
}

double IdentityReport::max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.max_residual);
    return r;
}

IdentityReport check_identities(uint64_t z, int t_max, double tolerance, Backend backend) {
    if (tolerance < 0) throw std::invalid_argument("check_identities: tolerance must be >= 0");
    if (t_max < 0) throw std::invalid_argument("check_identities: t_max must be >= 0");

    IdentityReport report;
    report.z = z;
    report.t_max = t_max;
    report.backend = backend;
    report.tolerance = tolerance;

    const auto direct = esp_direct(z, std::max(t_max, 2), backend);
    const auto sums = power_sums_up_to(static_cast<unsigned>(std::max(t_max, 2)), z, backend);
    const auto newton = esp_via_newton(sums, t_max);
    const auto recursive = esp_recursive(z, t_max, backend);

    auto push = [&](std::string name, double residual) {
        report.checks.push_back({std::move(name), residual, residual <= tolerance});
    };

    // (a) 2 f(2;z) = S_1^2 - S_2
    if (backend == Backend::Rational) {
        const Rational lhs = 2 * direct.exact_value(2);
        const Rational rhs = sums[0].exact * sums[0].exact - sums[1].exact;
        push("twice_f2_vs_power_sums", std::abs(to_double(lhs - rhs)));
    } else {
        const double lhs = 2.0 * direct.value(2);
        const double rhs = sums[0].approx * sums[0].approx - sums[1].approx;
        push("twice_f2_vs_power_sums", std::abs(lhs - rhs));
    }

    // (b) all three evaluation routes agree for t <= t_max
    auto max_diff = [&](const SymmetricSeries& a, const SymmetricSeries& b) {
        double r = 0.0;
        for (int t = 0; t <= t_max; ++t) {
            if (backend == Backend::Rational)
                r = std::max(r, std::abs(to_double(a.exact_value(t) - b.exact_value(t))));
            else
                r = std::max(r, std::abs(a.value(t) - b.value(t)));
        }
        return r;
    };
    push("direct_vs_newton", max_diff(direct, newton));
    push("direct_vs_recursive", max_diff(direct, recursive));

    // (c) zero tail past the number of odd primes
    double tail = 0.0;
    for (int t = static_cast<int>(direct.odd_prime_count) + 1; t <= t_max; ++t)
        tail = std::max(tail, std::abs(direct.value(t)));
    push("zero_tail", tail);

    return report;
}

}  // namespace twinsieve
