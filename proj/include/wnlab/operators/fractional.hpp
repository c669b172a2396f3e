#pragma once

// Fractional maximal operator and Riesz potential in one dimension,
// 0 < alpha < 1.

#include "wnlab/sampled.hpp"

namespace wnlab::ops {

// max over node-endpoint intervals Q containing x of |Q|^(alpha-1) int_Q |f|
SampledFunction frac_maximal(const SampledFunction& f, double alpha);

// int f(y) |x-y|^(alpha-1) dy with the singular cell integrated exactly
SampledFunction frac_integral(const SampledFunction& f, double alpha);

}  // namespace wnlab::ops
