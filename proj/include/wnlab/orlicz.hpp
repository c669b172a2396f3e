#pragma once

// The logarithmic Young-function scale Phi_lambda(t) = t * log(e + t)^lambda
// and localized Luxemburg norms over intervals.

#include "wnlab/intervals.hpp"
#include "wnlab/sampled.hpp"

namespace wnlab {

class OrliczGauge {
 public:
  explicit OrliczGauge(double lambda);

  double lambda() const { return lambda_; }
  double eval(double t) const;     // Phi_lambda(t), t >= 0
  double inverse(double s) const;  // monotone bisection, relative tol 1e-10

 private:
  double lambda_;
};

// The unique t > 0 with avg_Q Phi(|f|/t) = 1; returns 0 when f vanishes on Q.
// Q is intersected with the grid support; empty intersection is an error.
double luxemburg_norm(const SampledFunction& f, const OrliczGauge& gauge,
                      const Interval& Q);

}  // namespace wnlab
