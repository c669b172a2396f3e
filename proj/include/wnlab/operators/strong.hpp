#pragma once

// Strong maximal function over axis-parallel rectangles on a 2-D tensor
// grid. Returns both the certified maximum over the tensor rectangle family
// (per-axis node-endpoint intervals) and the iterated one-dimensional upper
// bound M_y(M_x F).

#include "wnlab/sampled.hpp"

namespace wnlab::ops {

struct StrongMaximalResult {
  SampledFunction2D certified;
  SampledFunction2D tensor_bound;
};

StrongMaximalResult strong_maximal_2d(const SampledFunction2D& F);

}  // namespace wnlab::ops
