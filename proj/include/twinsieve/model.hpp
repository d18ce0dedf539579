#pragma once

#include <cstdint>
#include <string>

#include "twinsieve/arith.hpp"
#include "twinsieve/symmetric.hpp"

namespace twinsieve {

enum class CorrectionMode { ExactProduct, TruncatedSeries };

// The sieve density correction D(z) = 2 N / D^2 with N, D either the exact
// products over odd primes <= z or their series truncated at t_max.
struct CorrectionFactor {
    uint64_t z = 0;
    CorrectionMode mode = CorrectionMode::ExactProduct;
    int t_max = -1;  // series mode only
    Backend backend = Backend::Rational;

    double value = 2.0;
    double numerator = 1.0;    // prod (1 - 2/p), truncated in series mode
    double denominator = 1.0;  // prod (1 - 1/p), truncated in series mode

    // Exact components, meaningful iff backend == Rational.
    Rational exact_value{2};
    Rational exact_numerator{1};
    Rational exact_denominator{1};
};

// 2 prod_{3<=p<=z} (1-2/p)/(1-1/p)^2; empty product gives 2.
CorrectionFactor correction_exact(uint64_t z, Backend backend = Backend::Rational);

// Same quantity with both products expanded into series in f(t;z) and
// truncated at t_max. Throws singularity_error when the truncated
// denominator vanishes.
CorrectionFactor correction_series(uint64_t z, int t_max, Backend backend,
                                   const RationalLimits& limits = {});

// 2 prod_{2<p<=cutoff} (1 - 1/(p-1)^2), the partial product for 2 C_2.
struct HLConstant {
    uint64_t cutoff = 0;
    double value = 0.0;
};

HLConstant hl_constant(uint64_t cutoff);  // requires cutoff >= 3

enum class HLMode { Plain, Integral };

inline const char* to_string(HLMode m) { return m == HLMode::Plain ? "plain" : "integral"; }
HLMode hl_mode_from_string(const std::string& s);

enum class Method { ThisWork, HLPlain, HLIntegral };
const char* to_string(Method m);

// One prediction of pi_2(x), with the knobs that produced it. rounded is
// signed: pathological truncations can push the correction negative and the
// sweeps report that honestly.
struct Prediction {
    uint64_t x = 0;
    Method method = Method::ThisWork;
    double raw = 0.0;
    int64_t rounded = 0;

    // this-work snapshot
    double theta = 0.0;
    int t_max = 0;
    Backend backend = Backend::Rational;
    uint64_t z = 0;

    // HL snapshot
    uint64_t hl_cutoff = 0;
};

// floor(x^theta), robust at exact-power boundaries.
uint64_t sieving_limit(uint64_t x, double theta);

// D_approx(z = floor(x^theta), t_max) * x / (ln x)^2, nearest-integer rounded.
Prediction predict_this_work(uint64_t x, double theta, int t_max, Backend backend,
                             const RationalLimits& limits = {});

// 2C2 * x/(ln x)^2 (plain) or 2C2 * int_2^x dt/ln^2 t (integral).
Prediction predict_hl(uint64_t x, HLMode mode, const HLConstant& constant);

}  // namespace twinsieve
