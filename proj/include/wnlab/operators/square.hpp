#pragma once

// Dyadic square function over a shifted dyadic lattice: for every non-root
// cube Q, the squared deviation of the cube average from the parent average
// contributes on Q.

#include "wnlab/intervals.hpp"
#include "wnlab/sampled.hpp"

namespace wnlab::ops {

SampledFunction dyadic_square(const SampledFunction& f, const DyadicFamily& D);

}  // namespace wnlab::ops
