#pragma once

// Vector-valued extension of the maximal function: componentwise M followed
// by an l^q aggregation at every node.

#include "wnlab/sampled.hpp"

namespace wnlab::ops {

struct VectorSampledFunction {
  std::vector<SampledFunction> components;  // all on one shared grid
  double q = 2.0;                           // l^q aggregation, q in (1, inf)

  VectorSampledFunction(std::vector<SampledFunction> comps, double q);
  const Grid& grid() const { return components.front().grid(); }
};

// (sum_j |f_j|^q)^(1/q) nodewise
SampledFunction lq_aggregate(const VectorSampledFunction& fs);

// (sum_j (M f_j)^q)^(1/q) nodewise
SampledFunction vv_maximal(const VectorSampledFunction& fs);

}  // namespace wnlab::ops
