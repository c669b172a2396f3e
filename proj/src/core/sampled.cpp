#include "wnlab/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wnlab {

double TailModel::eval(double abs_x) const {
  return coefficient * std::pow(std::log(abs_x), log_exponent) *
         std::pow(abs_x, -power);
}

namespace {

void validate_tail(const Grid& g, const std::vector<double>& v,
                   const TailModel& t) {
  if (!(t.coefficient >= 0.0) || !(t.log_exponent >= 0.0) || !(t.power > 0.0))
    throw std::invalid_argument("tail model: need c >= 0, m >= 0, s > 0");
  if (t.sides != 1 && t.sides != 2)
    throw std::invalid_argument("tail model: sides must be 1 or 2");
  if (!(g.extent > 1.0) || !(g.nodes.back() > 1.0))
    throw std::invalid_argument("tail model: requires grid extent > 1");
  // the model must agree with the sampled value at the outermost node (10%)
  const std::size_t i = v.size() - 1;
  const double sample = std::fabs(v[i]);
  const double model = t.eval(g.nodes[i]);
  if (model == 0.0 && sample == 0.0) return;
  if (!(std::fabs(sample - model) <= 0.10 * std::max(model, 1e-300)))
    throw std::invalid_argument(
        "tail model: disagrees with sampled value at the outermost node");
}

}  // namespace

SampledFunction::SampledFunction(GridPtr grid, std::vector<double> values,
                                 std::optional<TailModel> tail)
    : grid_(std::move(grid)), values_(std::move(values)), tail_(std::move(tail)) {
  if (!grid_) throw std::invalid_argument("sampled function: null grid");
  if (values_.size() != grid_->size())
    throw std::invalid_argument("sampled function: values/nodes length mismatch");
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("sampled function: non-finite value");
  if (tail_) validate_tail(*grid_, values_, *tail_);
}

SampledFunction SampledFunction::from_function(
    GridPtr grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid->nodes[i]);
  return SampledFunction(std::move(grid), std::move(v));
}

SampledFunction SampledFunction::indicator(GridPtr grid, double lo, double hi) {
  std::vector<double> v(grid->size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (grid->nodes[i] > lo && grid->nodes[i] < hi) v[i] = 1.0;
  return SampledFunction(std::move(grid), std::move(v));
}

SampledFunction SampledFunction::zero(GridPtr grid) {
  std::vector<double> v(grid->size(), 0.0);
  return SampledFunction(std::move(grid), std::move(v));
}

void SampledFunction::attach_calibrated_tail(double log_exponent, double power,
                                             int sides) {
  const std::size_t i = values_.size() - 1;
  const double sample = std::fabs(values_[i]);
  if (sample == 0.0) return;
  TailModel t;
  t.log_exponent = log_exponent;
  t.power = power;
  t.sides = sides;
  t.coefficient = 1.0;
  t.coefficient = sample / t.eval(grid_->nodes[i]);
  validate_tail(*grid_, values_, t);
  tail_ = t;
}

void SampledFunction::set_tail(const TailModel& t) {
  validate_tail(*grid_, values_, t);
  tail_ = t;
}

SampledFunction2D::SampledFunction2D(GridPtr gx, GridPtr gy, std::vector<double> v)
    : grid_x(std::move(gx)), grid_y(std::move(gy)), values(std::move(v)) {
  if (!grid_x || !grid_y) throw std::invalid_argument("sampled 2d: null grid");
  if (values.size() != grid_x->size() * grid_y->size())
    throw std::invalid_argument("sampled 2d: values/grid size mismatch");
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("sampled 2d: non-finite value");
}

SampledFunction2D SampledFunction2D::from_function(
    GridPtr gx, GridPtr gy, const std::function<double(double, double)>& fn) {
  std::vector<double> v(gx->size() * gy->size());
  for (std::size_t iy = 0; iy < gy->size(); ++iy)
    for (std::size_t ix = 0; ix < gx->size(); ++ix)
      v[iy * gx->size() + ix] = fn(gx->nodes[ix], gy->nodes[iy]);
  return SampledFunction2D(std::move(gx), std::move(gy), std::move(v));
}

}  // namespace wnlab
