#pragma once

// Bessel functions J_eta for integer and half-integer order: ascending power
// series at small argument, Hankel-type asymptotics (or the closed
// trigonometric forms for half-integer order) at large argument.

namespace wnlab::ops {

// eta >= 0 with 2*eta integral; r >= 0
double bessel_j(double eta, double r);

// the two regimes, exposed for cross-validation
double bessel_j_series(double eta, double r);
double bessel_j_large(double eta, double r);

// switch point between the regimes
double bessel_switch_radius(double eta);

// phase tau in J_eta(r) ~ sqrt(2/(pi r)) cos(r - tau)
double bessel_phase(double eta);

}  // namespace wnlab::ops
