#include "wnlab/operators/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "wnlab/kernels.hpp"
#include "wnlab/norms.hpp"
#include "wnlab/operators/maximal.hpp"

namespace wnlab::ops {

namespace {

std::vector<double> pv_apply(const Grid& g, const std::vector<double>& fv) {
  const std::size_t n = fv.size();
  std::vector<double> weighted(n);
  for (std::size_t j = 0; j < n; ++j) weighted[j] = fv[j] * g.widths[j] / M_PI;
  std::vector<double> out(n);
  const double* x = g.nodes.data();
  const double* w = weighted.data();
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    out[i] = kernels::cauchy_sum(x, w, i, xi) +
             kernels::cauchy_sum(x + i + 1, w + i + 1, n - i - 1, xi);
  }
  return out;
}

std::vector<double> commutator_values(const Grid& g, const std::vector<double>& b,
                                      const std::vector<double>& fv, int k) {
  if (k == 0) return pv_apply(g, fv);
  std::vector<double> lhs = commutator_values(g, b, fv, k - 1);
  std::vector<double> bf(fv.size());
  for (std::size_t i = 0; i < fv.size(); ++i) bf[i] = b[i] * fv[i];
  std::vector<double> rhs = commutator_values(g, b, bf, k - 1);
  for (std::size_t i = 0; i < fv.size(); ++i) lhs[i] = b[i] * lhs[i] - rhs[i];
  return lhs;
}

}  // namespace

SampledFunction hilbert(const SampledFunction& f) {
  const auto& g = f.grid();
  const bool compact = compactly_supported(f);
  const double mass = integral(f);
  SampledFunction out(f.grid_ptr(), pv_apply(g, f.values()));
  if (compact && g.extent > 2.0 && mass != 0.0) out.attach_calibrated_tail(0.0, 1.0);
  return out;
}

SampledFunction commutator_k(const SampledFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("commutator: k must be >= 1");
  const auto& g = f.grid();
  std::vector<double> b(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.nodes[i] == 0.0)
      throw std::invalid_argument("commutator: grid places a node at x = 0");
    b[i] = std::log(std::fabs(g.nodes[i]));
  }
  const bool compact = compactly_supported(f);
  SampledFunction out(f.grid_ptr(), commutator_values(g, b, f.values(), k));
  if (compact && g.extent > 2.0)
    out.attach_calibrated_tail(static_cast<double>(k), 1.0);
  return out;
}

}  // namespace wnlab::ops
