#pragma once

// Midpoint-rule L^p norms over the grid extent, plus the closed-form tail
// integral when a tail model is attached. Evaluation is scaled so that huge
// exponents (p in the hundreds) stay in range.

#include <stdexcept>

#include "wnlab/sampled.hpp"

namespace wnlab {

// thrown when a tail model makes the requested L^p integral infinite
struct DivergentTailError : std::runtime_error {
  explicit DivergentTailError(const std::string& what) : std::runtime_error(what) {}
};

// (integral of |f|^p over [-R, R])^(1/p) + closed-form tail contribution
double lp_norm(const SampledFunction& f, double p);

// log of integral |f|^p (core + tail); -inf for f == 0
double log_lp_integral(const SampledFunction& f, double p);

double lp_norm(const SampledFunction2D& f, double p);

// integral of f over [-R, R] (signed)
double integral(const SampledFunction& f);

}  // namespace wnlab
