#pragma once

// Real functions sampled at grid nodes, with optional power-log tail models
// |f(x)| ~ c * log(|x|)^m * |x|^(-s) for |x| beyond the grid extent. The tail
// model supplies the closed-form part of L^p integrals so that norm estimates
// are not capped by the grid truncation.

#include <functional>
#include <optional>
#include <vector>

#include "wnlab/grid.hpp"

namespace wnlab {

struct TailModel {
  double coefficient = 0.0;   // c >= 0
  double log_exponent = 0.0;  // m >= 0
  double power = 1.0;         // s > 0
  int sides = 2;              // 2: both tails; 1: the +x tail only

  double eval(double abs_x) const;
};

class SampledFunction {
 public:
  SampledFunction(GridPtr grid, std::vector<double> values,
                  std::optional<TailModel> tail = std::nullopt);

  static SampledFunction from_function(GridPtr grid,
                                       const std::function<double(double)>& fn);
  static SampledFunction indicator(GridPtr grid, double lo, double hi);
  static SampledFunction zero(GridPtr grid);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }
  double value(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const std::optional<TailModel>& tail() const { return tail_; }

  // attaches a tail model whose coefficient is calibrated so the model matches
  // |f| at the outermost node (skips attachment if that sample vanishes)
  void attach_calibrated_tail(double log_exponent, double power, int sides = 2);
  void set_tail(const TailModel& t);
  void clear_tail() { tail_.reset(); }

 private:
  GridPtr grid_;
  std::vector<double> values_;
  std::optional<TailModel> tail_;
};

struct SampledFunction2D {
  GridPtr grid_x;
  GridPtr grid_y;
  std::vector<double> values;  // values[iy * nx + ix]

  SampledFunction2D(GridPtr gx, GridPtr gy, std::vector<double> v);
  static SampledFunction2D from_function(
      GridPtr gx, GridPtr gy, const std::function<double(double, double)>& fn);

  std::size_t nx() const { return grid_x->size(); }
  std::size_t ny() const { return grid_y->size(); }
  double at(std::size_t ix, std::size_t iy) const { return values[iy * nx() + ix]; }
  double& at(std::size_t ix, std::size_t iy) { return values[iy * nx() + ix]; }
};

}  // namespace wnlab
