#include "wnlab/operators/vector.hpp"

#include <cmath>
#include <stdexcept>

#include "wnlab/operators/maximal.hpp"

namespace wnlab::ops {

VectorSampledFunction::VectorSampledFunction(std::vector<SampledFunction> comps,
                                             double q_)
    : components(std::move(comps)), q(q_) {
  if (components.empty())
    throw std::invalid_argument("vector function: needs at least one component");
  if (!(q > 1.0) || !std::isfinite(q))
    throw std::invalid_argument("vector function: q must lie in (1, inf)");
  const Grid* g = &components.front().grid();
  for (const auto& c : components)
    if (&c.grid() != g)
      throw std::invalid_argument("vector function: components must share one grid");
}

namespace {

SampledFunction aggregate(const std::vector<SampledFunction>& comps, double q,
                          GridPtr grid) {
  std::vector<double> acc(grid->size(), 0.0);
  for (const auto& c : comps)
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += std::pow(std::fabs(c.value(i)), q);
  for (double& a : acc) a = std::pow(a, 1.0 / q);
  return SampledFunction(std::move(grid), std::move(acc));
}

}  // namespace

SampledFunction lq_aggregate(const VectorSampledFunction& fs) {
  return aggregate(fs.components, fs.q, fs.components.front().grid_ptr());
}

SampledFunction vv_maximal(const VectorSampledFunction& fs) {
  GridPtr grid = fs.components.front().grid_ptr();
  std::vector<double> acc(grid->size(), 0.0);
  bool all_compact = true;
  for (const auto& c : fs.components) {
    all_compact = all_compact && compactly_supported(c);
    SampledFunction m = hl_maximal(c);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += std::pow(m.value(i), fs.q);
  }
  for (double& a : acc) a = std::pow(a, 1.0 / fs.q);
  SampledFunction out(std::move(grid), std::move(acc));
  if (all_compact && out.grid().extent > 2.0 && out.values().back() > 0.0)
    out.attach_calibrated_tail(0.0, 1.0);
  return out;
}

}  // namespace wnlab::ops
