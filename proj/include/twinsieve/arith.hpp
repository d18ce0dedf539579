#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twinsieve {

// Exact arithmetic is GMP rationals throughout; the float backend is plain
// doubles with compensated accumulation at every summation site.
using Rational = mpq_class;

enum class Backend { Rational, Float };

inline const char* to_string(Backend b) {
    return b == Backend::Rational ? "rational" : "float";
}

inline Backend backend_from_string(const std::string& s) {
    if (s == "rational" || s == "exact" || s == "exact-rational") return Backend::Rational;
    if (s == "float" || s == "compensated-float") return Backend::Float;
    throw std::invalid_argument("unknown backend '" + s + "' (expected rational|float)");
}

// Neumaier-compensated accumulator. Drop-in for += chains; read with value().
class Compensated {
public:
    Compensated() = default;
    explicit Compensated(double v) : sum_(v) {}

    Compensated& operator+=(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
        return *this;
    }
    Compensated& operator-=(double v) { return *this += -v; }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

}  // namespace twinsieve
