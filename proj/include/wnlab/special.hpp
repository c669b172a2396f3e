#pragma once

// Gamma-family special functions backing the tail integrals and the
// Bochner-Riesz kernel. Lanczos for Gamma, series/continued fraction for the
// incomplete gamma (both in linear and log scale).

namespace wnlab::special {

// Lanczos approximation, relative error well below 1e-10 for x > 0
double gamma_fn(double x);
double log_gamma(double x);

// regularized lower/upper incomplete gamma P(a,x), Q(a,x); a > 0, x >= 0
double reg_gamma_p(double a, double x);
double reg_gamma_q(double a, double x);

// log of the (unregularized) upper incomplete gamma Gamma(a, x)
double log_upper_gamma(double a, double x);

// log of int_R^inf (log r)^m * r^(-b) dr for b > 1, m >= 0, R > 1
// (substituting u = log r reduces it to an upper incomplete gamma)
double log_power_log_tail_integral(double m, double b, double R);

}  // namespace wnlab::special
