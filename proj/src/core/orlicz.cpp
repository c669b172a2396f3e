#include "wnlab/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wnlab {

OrliczGauge::OrliczGauge(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("orlicz gauge: lambda must be >= 0");
}

double OrliczGauge::eval(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("orlicz gauge: negative argument");
  if (lambda_ == 0.0) return t;
  if (lambda_ == 1.0) return t * std::log(M_E + t);
  return t * std::pow(std::log(M_E + t), lambda_);
}

double OrliczGauge::inverse(double s) const {
  if (!(s >= 0.0)) throw std::invalid_argument("orlicz gauge: negative argument");
  if (s == 0.0) return 0.0;
  if (lambda_ == 0.0) return s;
  double lo = s / std::pow(std::log(M_E + s), lambda_);
  double hi = s;
  for (int i = 0; i < 200 && (hi - lo) > 1e-10 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (eval(mid) < s ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double luxemburg_norm(const SampledFunction& f, const OrliczGauge& gauge,
                      const Interval& Q) {
  const auto& g = f.grid();
  const double a = std::max(Q.lo, g.edges.front());
  const double b = std::min(Q.hi, g.edges.back());
  if (!(b > a)) throw std::invalid_argument("luxemburg norm: interval misses the grid");

  // overlap weights of Q against grid cells
  const std::size_t i0 = g.cell_of(a);
  const std::size_t i1 = g.cell_of(std::nextafter(b, a));
  double meas = 0.0;
  double vmax = 0.0;
  std::vector<double> ow(i1 - i0 + 1);
  std::vector<double> av(i1 - i0 + 1);
  for (std::size_t i = i0; i <= i1; ++i) {
    const double w = std::min(b, g.edges[i + 1]) - std::max(a, g.edges[i]);
    ow[i - i0] = std::max(w, 0.0);
    av[i - i0] = std::fabs(f.value(i));
    meas += ow[i - i0];
    if (ow[i - i0] > 0.0) vmax = std::max(vmax, av[i - i0]);
  }
  if (vmax == 0.0) return 0.0;

  auto G = [&](double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < ow.size(); ++k)
      if (ow[k] > 0.0 && av[k] > 0.0) s += ow[k] * gauge.eval(av[k] / t);
    return s / meas;
  };

  double lo = 1e-16 * vmax;
  double hi = vmax * (gauge.eval(1.0) + 1.0);
  for (int i = 0; i < 90 && G(hi) > 1.0; ++i) hi *= 2.0;
  for (int i = 0; i < 30 && G(lo) < 1.0; ++i) lo *= 0.25;
  for (int i = 0; i < 200 && (hi - lo) > 1e-10 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (G(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace wnlab
