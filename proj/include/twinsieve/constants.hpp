#pragma once

namespace twinsieve {

// Meissel-Mertens constant, stored to full double precision. A slow
// convergence check against sum(1/p) - ln ln z lives in the tests.
inline constexpr double kMeisselMertens = 0.26149721284764278;

// Variant over odd primes only; removing p=2 from Mertens' sum subtracts 1/2.
inline constexpr double kMeisselMertensOdd = kMeisselMertens - 0.5;

}  // namespace twinsieve
