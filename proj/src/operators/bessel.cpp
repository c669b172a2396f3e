#include "wnlab/operators/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "wnlab/special.hpp"

namespace wnlab::ops {

namespace {

void check_order(double eta) {
  if (!(eta >= 0.0) || std::fabs(2.0 * eta - std::round(2.0 * eta)) > 1e-12)
    throw std::invalid_argument("bessel_j: order must be a half-integer >= 0");
}

bool is_half_integer(double eta) {
  return std::fabs(2.0 * eta - std::round(2.0 * eta)) < 1e-12 &&
         std::fabs(eta - std::round(eta)) > 0.25;
}

}  // namespace

double bessel_switch_radius(double eta) { return 14.0 + eta; }

double bessel_phase(double eta) { return eta * M_PI_2 + M_PI_4; }

double bessel_j_series(double eta, double r) {
  check_order(eta);
  if (!(r >= 0.0)) throw std::invalid_argument("bessel_j: r must be >= 0");
  if (r == 0.0) return eta == 0.0 ? 1.0 : 0.0;
  const double half = 0.5 * r;
  double term = std::exp(eta * std::log(half) - special::log_gamma(eta + 1.0));
  double sum = term;
  const double h2 = half * half;
  for (int m = 0; m < 400; ++m) {
    term *= -h2 / ((m + 1.0) * (m + 1.0 + eta));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) break;
  }
  return sum;
}

double bessel_j_large(double eta, double r) {
  check_order(eta);
  if (!(r > 0.0)) throw std::invalid_argument("bessel_j: asymptotic needs r > 0");
  const double pref = std::sqrt(2.0 / (M_PI * r));
  if (is_half_integer(eta)) {
    // J_{1/2}, J_{3/2}, ... in closed trigonometric form via upward recurrence
    double jm = pref * std::cos(r);  // J_{-1/2}
    double j = pref * std::sin(r);   // J_{+1/2}
    for (double nu = 0.5; nu < eta - 0.25; nu += 1.0) {
      const double jn = (2.0 * nu / r) * j - jm;
      jm = j;
      j = jn;
    }
    return j;
  }
  const double mu = 4.0 * eta * eta;
  const double w = 8.0 * r;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double f = 2.0 * k - 1.0;
    const double next = term * (mu - f * f) / (k * w);
    if (std::fabs(next) > std::fabs(term)) break;  // asymptotic series: stop at smallest term
    term = next;
    if (k % 2 == 1)
      q += (k % 4 == 1 ? term : -term);
    else
      p += (k % 4 == 2 ? -term : term);
    if (std::fabs(term) < 1e-17) break;
  }
  const double omega = r - bessel_phase(eta);
  return pref * (p * std::cos(omega) - q * std::sin(omega));
}

double bessel_j(double eta, double r) {
  check_order(eta);
  if (!(r >= 0.0)) throw std::invalid_argument("bessel_j: r must be >= 0");
  return r <= bessel_switch_radius(eta) ? bessel_j_series(eta, r)
                                        : bessel_j_large(eta, r);
}

}  // namespace wnlab::ops
