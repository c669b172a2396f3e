#pragma once

// Uncentered Hardy-Littlewood maximal function on the grid. The discrete
// family is all intervals with node endpoints [x_a, x_b] containing x_i,
// together with the single-node value |f_i| (so Mf >= |f| pointwise). For
// any interval containing x_i the average is a convex combination of the
// averages over its two halves split at x_i, so the family maximum equals
// the larger of two one-sided anchored maxima; each one-sided scan is
// solved exactly with an upper convex hull of prefix-sum points.

#include "wnlab/sampled.hpp"

namespace wnlab::ops {

// r[i] = max_{b > i} (S[b] - S[i]) / (x[b] - x[i]); -inf when i == n-1.
// Exact: hull decisions use fma-based sign evaluation of the 2x2 determinant.
std::vector<double> max_forward_slopes(const std::vector<double>& x,
                                       const std::vector<double>& S);

// core routine on raw cell data (|f| per cell, widths, node positions)
std::vector<double> maximal_values(const std::vector<double>& abs_f,
                                   const std::vector<double>& widths,
                                   const std::vector<double>& nodes);

SampledFunction hl_maximal(const SampledFunction& f);

// M^k = M(M^{k-1}); k >= 1. Attaches the log^{k-1}(x)/x tail model when the
// input is compactly supported inside the grid.
SampledFunction iterated_maximal(const SampledFunction& f, int k);

// true when f carries no tail model and vanishes outside [-R/2, R/2]
bool compactly_supported(const SampledFunction& f);

}  // namespace wnlab::ops
