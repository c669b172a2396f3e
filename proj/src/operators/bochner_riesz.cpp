#include "wnlab/operators/bochner_riesz.hpp"

#include <cmath>
#include <stdexcept>

#include "wnlab/operators/bessel.hpp"
#include "wnlab/special.hpp"

namespace wnlab::ops {

double br_kernel(double lambda, int n, double x) {
  if (n != 1 && n != 2) throw std::invalid_argument("br_kernel: n must be 1 or 2");
  if (!(lambda >= 0.0)) throw std::invalid_argument("br_kernel: lambda must be >= 0");
  if (x == 0.0) throw std::invalid_argument("br_kernel: x must be nonzero");
  const double eta = 0.5 * n + lambda;
  const double ax = std::fabs(x);
  return special::gamma_fn(lambda + 1.0) / std::pow(M_PI, lambda) *
         bessel_j(eta, 2.0 * M_PI * ax) / std::pow(ax, eta);
}

double br_endpoint_integral(int n, double p, double r1, double R, double cutoff) {
  if (n != 1 && n != 2) throw std::invalid_argument("br_endpoint_integral: n must be 1 or 2");
  if (!(p > 1.0) || !(p < 2.0))
    throw std::invalid_argument("br_endpoint_integral: p must lie in (1, 2)");
  if (!(r1 > 0.0) || !(R > r1))
    throw std::invalid_argument("br_endpoint_integral: need 0 < r1 < R");

  const double tau = bessel_phase(n - 0.5);
  const double rc = std::min(R, std::max(cutoff, r1));
  auto piece = [&](double lo, double hi) {
    // int_lo^hi r^(-p) dr
    return (std::pow(lo, 1.0 - p) - std::pow(hi, 1.0 - p)) / (p - 1.0);
  };

  // |cos(r - tau)| > 1/2  <=>  r - tau in (k pi - pi/3, k pi + pi/3)
  double sum = 0.0;
  long k = static_cast<long>(std::floor((r1 - tau) / M_PI)) - 1;
  for (;; ++k) {
    const double c = tau + k * M_PI;
    const double lo = std::max(c - M_PI / 3.0, r1);
    const double hi = std::min(c + M_PI / 3.0, rc);
    if (lo >= rc) break;
    if (hi > lo) sum += piece(lo, hi);
  }
  if (R > rc) {
    // beyond the enumeration cutoff the set fills 2/3 of every period
    const double hi_term = std::isinf(R) ? 0.0 : std::pow(R, 1.0 - p);
    sum += (2.0 / 3.0) * (std::pow(rc, 1.0 - p) - hi_term) / (p - 1.0);
  }
  return sum;
}

}  // namespace wnlab::ops
