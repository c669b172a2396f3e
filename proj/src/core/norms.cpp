#include "wnlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wnlab/kernels.hpp"
#include "wnlab/special.hpp"

namespace wnlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

}  // namespace

double log_lp_integral(const SampledFunction& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  const auto& g = f.grid();
  const auto& v = f.values();
  const double scale = kernels::abs_max(v.data(), v.size());

  double log_core = kNegInf;
  if (scale > 0.0) {
    const double s = kernels::weighted_abs_pow_sum(g.widths.data(), v.data(),
                                                   v.size(), p, 1.0 / scale);
    if (s > 0.0) log_core = p * std::log(scale) + std::log(s);
  }

  double log_tail = kNegInf;
  if (f.tail() && f.tail()->coefficient > 0.0) {
    const auto& t = *f.tail();
    if (t.power * p <= 1.0)
      throw DivergentTailError("divergent tail: s*p <= 1 for the attached tail model");
    log_tail = p * std::log(t.coefficient) +
               special::log_power_log_tail_integral(t.log_exponent * p,
                                                    t.power * p, g.extent);
    if (t.sides == 2) log_tail += std::log(2.0);
  }
  return log_add(log_core, log_tail);
}

double lp_norm(const SampledFunction& f, double p) {
  const double L = log_lp_integral(f, p);
  if (L == kNegInf) return 0.0;
  return std::exp(L / p);
}

double lp_norm(const SampledFunction2D& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  const auto& wx = f.grid_x->widths;
  const auto& wy = f.grid_y->widths;
  const double scale = kernels::abs_max(f.values.data(), f.values.size());
  if (scale == 0.0) return 0.0;
  double log_rows = kNegInf;
  for (std::size_t iy = 0; iy < f.ny(); ++iy) {
    const double s = kernels::weighted_abs_pow_sum(
        wx.data(), f.values.data() + iy * f.nx(), f.nx(), p, 1.0 / scale);
    if (s > 0.0) log_rows = log_add(log_rows, std::log(wy[iy]) + std::log(s));
  }
  if (log_rows == kNegInf) return 0.0;
  return scale * std::exp(log_rows / p);
}

double integral(const SampledFunction& f) {
  const auto& g = f.grid();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += g.widths[i] * f.value(i);
  return s;
}

}  // namespace wnlab
