#include "twinsieve/logint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twinsieve {

namespace {

constexpr double kEulerGamma = 0.57721566490153286;

double inv_log_squared(double t) {
    const double l = std::log(t);
    return 1.0 / (l * l);
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(double a, double b, double fa, double fm, double fb, double whole,
                     double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = inv_log_squared(lm);
    const double frm = inv_log_squared(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_step(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_step(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace

double exponential_integral_ei(double x) {
    if (!(x > 0.0)) throw std::domain_error("exponential_integral_ei: requires x > 0");

    if (x <= 40.0) {
        // Ei(x) = gamma + ln x + sum_{n>=1} x^n / (n n!); all terms positive.
        double sum = 0.0;
        double term = 1.0;
        for (int n = 1; n <= 400; ++n) {
            term *= x / n;
            const double add = term / n;
            sum += add;
            if (add < 1e-17 * sum) break;
        }
        return kEulerGamma + std::log(x) + sum;
    }

    // Asymptotic: (e^x / x) sum_k k!/x^k, truncated at the smallest term.
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k < 120; ++k) {
        const double next = term * k / x;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::exp(x) / x * sum;
}

double log_integral(double x) {
    if (!(x > 1.0)) throw std::domain_error("log_integral: requires x > 1");
    return exponential_integral_ei(std::log(x));
}

double li2_quadrature(double x) {
    if (!(x >= 2.0)) throw std::domain_error("li2_quadrature: requires x >= 2");
    if (x == 2.0) return 0.0;
    const double a = 2.0;
    const double fa = inv_log_squared(a);
    const double fb = inv_log_squared(x);
    const double m = 0.5 * (a + x);
    const double fm = inv_log_squared(m);
    const double whole = simpson(a, x, fa, fm, fb);
    const double eps = 1e-12 * std::max(1.0, std::abs(whole));
    return adaptive_step(a, x, fa, fm, fb, whole, eps, 60);
}

double li2_identity(double x) {
    if (!(x >= 2.0)) throw std::domain_error("li2_identity: requires x >= 2");
    if (x == 2.0) return 0.0;
    constexpr double kLn2 = 0.6931471805599453;
    return log_integral(x) - log_integral(2.0) - x / std::log(x) + 2.0 / kLn2;
}

double li2_integral(double x) {
    const double ident = li2_identity(x);
    const double quad = li2_quadrature(x);
    const double scale = std::max({std::abs(ident), std::abs(quad), 1e-300});
    if (std::abs(ident - quad) > 1e-9 * scale)
        throw std::runtime_error("li2_integral: quadrature (" + std::to_string(quad) +
                                 ") and li-identity (" + std::to_string(ident) +
                                 ") routes disagree beyond 1e-9 at x = " + std::to_string(x));
    return ident;
}

}  // namespace twinsieve
