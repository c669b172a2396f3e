#include "wnlab/operators/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "wnlab/kernels.hpp"
#include "wnlab/operators/maximal.hpp"

namespace wnlab::ops {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("fractional operator: alpha must lie in (0, 1)");
}

}  // namespace

SampledFunction frac_maximal(const SampledFunction& f, double alpha) {
  check_alpha(alpha);
  const auto& g = f.grid();
  const std::size_t n = f.size();

  // prefix of |f| at nodes (half cell at each end, as for hl_maximal)
  std::vector<double> S(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = g.widths[i] * std::fabs(f.value(i));
    S[i] = acc + 0.5 * m;
    acc += m;
  }

  // best[i] = max over a <= i <= b, a < b of (x_b - x_a)^(alpha-1) (S_b - S_a):
  // for each left endpoint a, suffix-maximize the row over b, then fold the
  // row into best[] with an elementwise max
  const auto& x = g.nodes;
  std::vector<double> best(n, 0.0);
  std::vector<double> row(n);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b)
      row[b] = std::pow(x[b] - x[a], alpha - 1.0) * (S[b] - S[a]);
    for (std::size_t b = n - 1; b > a + 1; --b)
      row[b - 1] = std::max(row[b - 1], row[b]);   // suffix max
    best[a] = std::max(best[a], row[a + 1]);
    kernels::max_accumulate(best.data() + a + 1, row.data() + a + 1, n - a - 1);
  }
  SampledFunction out(f.grid_ptr(), std::move(best));
  if (compactly_supported(f) && g.extent > 2.0 && out.values().back() > 0.0)
    out.attach_calibrated_tail(0.0, 1.0 - alpha);
  return out;
}

SampledFunction frac_integral(const SampledFunction& f, double alpha) {
  check_alpha(alpha);
  const auto& g = f.grid();
  const std::size_t n = f.size();
  const auto& x = g.nodes;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      s += f.value(j) * g.widths[j] * std::pow(std::fabs(x[i] - x[j]), alpha - 1.0);
    }
    // exact local integral of |x - y|^(alpha-1) over the cell around x_i
    const double h = 0.5 * g.widths[i];
    s += f.value(i) * 2.0 * std::pow(h, alpha) / alpha;
    out[i] = s;
  }
  SampledFunction res(f.grid_ptr(), std::move(out));
  if (compactly_supported(f) && g.extent > 2.0 && res.values().back() > 0.0)
    res.attach_calibrated_tail(0.0, 1.0 - alpha);
  return res;
}

}  // namespace wnlab::ops
