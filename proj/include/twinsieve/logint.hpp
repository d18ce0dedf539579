#pragma once

namespace twinsieve {

// Ei(x) for x > 0: power series up to x = 40, asymptotic series beyond.
double exponential_integral_ei(double x);

// li(x) = Ei(ln x) for x > 1. Integrating from 2 everywhere keeps the
// principal-value singularity at t = 1 out of the picture.
double log_integral(double x);

// int_2^x dt / ln(t)^2, two independent routes.
double li2_quadrature(double x);  // adaptive Simpson
double li2_identity(double x);    // li(x) - li(2) - x/ln x + 2/ln 2

// Cross-checked value: both routes must agree to relative 1e-9.
double li2_integral(double x);

}  // namespace twinsieve
