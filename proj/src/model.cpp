#include "twinsieve/model.hpp"

#include <cmath>
#include <stdexcept>

#include "twinsieve/errors.hpp"
#include "twinsieve/logint.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

HLMode hl_mode_from_string(const std::string& s) {
    if (s == "plain") return HLMode::Plain;
    if (s == "integral") return HLMode::Integral;
    throw std::invalid_argument("unknown hl mode '" + s + "' (expected plain|integral)");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::ThisWork: return "this-work";
        case Method::HLPlain: return "hl-plain";
        case Method::HLIntegral: return "hl-integral";
    }
    return "?";
}

CorrectionFactor correction_exact(uint64_t z, Backend backend) {
    CorrectionFactor cf;
    cf.z = z;
    cf.mode = CorrectionMode::ExactProduct;
    cf.backend = backend;

    const auto odd = odd_primes_up_to(z);
    if (backend == Backend::Rational) {
        Rational num(1), den(1);
        for (uint64_t p : odd) {
            const auto pl = static_cast<unsigned long>(p);
            num *= Rational(pl - 2, pl);  // 1 - 2/p
            den *= Rational(pl - 1, pl);  // 1 - 1/p
        }
        cf.exact_numerator = num;
        cf.exact_denominator = den;
        cf.exact_value = 2 * num / (den * den);
        cf.numerator = to_double(num);
        cf.denominator = to_double(den);
        cf.value = to_double(cf.exact_value);
    } else {
        double num = 1.0, den = 1.0;
        for (uint64_t p : odd) {
            const double pd = static_cast<double>(p);
            num *= 1.0 - 2.0 / pd;
            den *= 1.0 - 1.0 / pd;
        }
        cf.numerator = num;
        cf.denominator = den;
        cf.value = 2.0 * num / (den * den);
    }
    return cf;
}

CorrectionFactor correction_series(uint64_t z, int t_max, Backend backend,
                                   const RationalLimits& limits) {
    if (t_max < 0) throw std::invalid_argument("correction_series: t_max must be >= 0");

    CorrectionFactor cf;
    cf.z = z;
    cf.mode = CorrectionMode::TruncatedSeries;
    cf.t_max = t_max;
    cf.backend = backend;

    const auto series = esp_direct(z, t_max, backend, limits);
    if (backend == Backend::Rational) {
        Rational num(0), den(0), pow_neg2(1), pow_neg1(1);
        for (int t = 0; t <= t_max; ++t) {
            num += pow_neg2 * series.exact_value(t);
            den += pow_neg1 * series.exact_value(t);
            pow_neg2 *= -2;
            pow_neg1 *= -1;
        }
        if (den == 0)
            throw singularity_error("correction_series: truncated denominator is zero at z = " +
                                    std::to_string(z) + ", t_max = " + std::to_string(t_max));
        cf.exact_numerator = num;
        cf.exact_denominator = den;
        cf.exact_value = 2 * num / (den * den);
        cf.numerator = to_double(num);
        cf.denominator = to_double(den);
        cf.value = to_double(cf.exact_value);
    } else {
        Compensated num, den;
        double pow_neg2 = 1.0, pow_neg1 = 1.0;
        for (int t = 0; t <= t_max; ++t) {
            num += pow_neg2 * series.value(t);
            den += pow_neg1 * series.value(t);
            pow_neg2 *= -2.0;
            pow_neg1 *= -1.0;
        }
        const double d = den.value();
        if (d == 0.0)
            throw singularity_error("correction_series: truncated denominator is zero at z = " +
                                    std::to_string(z) + ", t_max = " + std::to_string(t_max));
        cf.numerator = num.value();
        cf.denominator = d;
        cf.value = 2.0 * cf.numerator / (d * d);
    }
    return cf;
}

HLConstant hl_constant(uint64_t cutoff) {
    if (cutoff < 3) throw std::invalid_argument("hl_constant: cutoff must be >= 3");
    double prod = 1.0;
    for (uint64_t p : odd_primes_up_to(cutoff)) {
        const double q = static_cast<double>(p) - 1.0;
        prod *= 1.0 - 1.0 / (q * q);
    }
    return HLConstant{cutoff, 2.0 * prod};
}

namespace {

// (base)^exp <= bound, exactly, without overflow.
bool ipow_leq(uint64_t base, unsigned exp, uint64_t bound) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > bound) return false;
    }
    return acc <= bound;
}

}  // namespace

uint64_t sieving_limit(uint64_t x, double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("sieving_limit: theta must lie in (0,1)");
    if (x == 0) return 0;

    const double inv = 1.0 / theta;
    const auto k = static_cast<uint64_t>(std::llround(inv));
    uint64_t z = static_cast<uint64_t>(
        std::pow(static_cast<long double>(x), static_cast<long double>(theta)));

    if (k >= 2 && std::abs(inv - static_cast<double>(k)) < 1e-9) {
        // theta = 1/k: z is the exact integer k-th root of x.
        while (ipow_leq(z + 1, static_cast<unsigned>(k), x)) ++z;
        while (z > 0 && !ipow_leq(z, static_cast<unsigned>(k), x)) --z;
        return z;
    }
    // Generic theta: nudge across representation error of powl.
    const auto xl = static_cast<long double>(x);
    const auto il = static_cast<long double>(1.0) / static_cast<long double>(theta);
    while (std::pow(static_cast<long double>(z + 1), il) <= xl) ++z;
    while (z > 0 && std::pow(static_cast<long double>(z), il) > xl) --z;
    return z;
}

Prediction predict_this_work(uint64_t x, double theta, int t_max, Backend backend,
                             const RationalLimits& limits) {
    if (x < 10) throw std::invalid_argument("predict_this_work: x must be >= 10");
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("predict_this_work: theta must lie in (0,1)");

    Prediction pred;
    pred.x = x;
    pred.method = Method::ThisWork;
    pred.theta = theta;
    pred.t_max = t_max;
    pred.backend = backend;
    pred.z = sieving_limit(x, theta);

    const auto cf = correction_series(pred.z, t_max, backend, limits);
    const double lx = std::log(static_cast<double>(x));
    pred.raw = cf.value * static_cast<double>(x) / (lx * lx);
    pred.rounded = std::llround(pred.raw);
    return pred;
}

Prediction predict_hl(uint64_t x, HLMode mode, const HLConstant& constant) {
    if (x < 3) throw std::invalid_argument("predict_hl: x must be >= 3");

    Prediction pred;
    pred.x = x;
    pred.method = mode == HLMode::Plain ? Method::HLPlain : Method::HLIntegral;
    pred.hl_cutoff = constant.cutoff;

    if (mode == HLMode::Plain) {
        const double lx = std::log(static_cast<double>(x));
        pred.raw = constant.value * static_cast<double>(x) / (lx * lx);
    } else {
        pred.raw = constant.value * li2_integral(static_cast<double>(x));
    }
    pred.rounded = std::llround(pred.raw);
    return pred;
}

}  // namespace twinsieve
