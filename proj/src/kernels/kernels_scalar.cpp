#include "wnlab/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace wnlab::kernels::scalar {

double cauchy_sum(const double* x, const double* g, std::size_t n, double x0) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    s0 += g[j] / (x0 - x[j]);
    s1 += g[j + 1] / (x0 - x[j + 1]);
    s2 += g[j + 2] / (x0 - x[j + 2]);
    s3 += g[j + 3] / (x0 - x[j + 3]);
  }
  for (; j < n; ++j) s0 += g[j] / (x0 - x[j]);
  return (s0 + s1) + (s2 + s3);
}

double weighted_abs_pow_sum(const double* w, const double* v, std::size_t n,
                            double p, double inv_scale) {
  if (p == 1.0) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      s0 += w[j] * std::fabs(v[j]) * inv_scale;
      s1 += w[j + 1] * std::fabs(v[j + 1]) * inv_scale;
      s2 += w[j + 2] * std::fabs(v[j + 2]) * inv_scale;
      s3 += w[j + 3] * std::fabs(v[j + 3]) * inv_scale;
    }
    for (; j < n; ++j) s0 += w[j] * std::fabs(v[j]) * inv_scale;
    return (s0 + s1) + (s2 + s3);
  }
  if (p == 2.0) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      double a = v[j] * inv_scale, b = v[j + 1] * inv_scale;
      double c = v[j + 2] * inv_scale, d = v[j + 3] * inv_scale;
      s0 += w[j] * a * a;
      s1 += w[j + 1] * b * b;
      s2 += w[j + 2] * c * c;
      s3 += w[j + 3] * d * d;
    }
    for (; j < n; ++j) {
      double a = v[j] * inv_scale;
      s0 += w[j] * a * a;
    }
    return (s0 + s1) + (s2 + s3);
  }
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double a = std::fabs(v[j]) * inv_scale;
    if (a != 0.0) s += w[j] * std::pow(a, p);
  }
  return s;
}

double abs_max(const double* v, std::size_t n) {
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::fabs(v[j]));
  return m;
}

void max_accumulate(double* dst, const double* src, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = std::max(dst[j], src[j]);
}

void max_fill(double* dst, double c, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = std::max(dst[j], c);
}

void scaled_accumulate(double* dst, const double* src, double a, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] += a * src[j];
}

}  // namespace wnlab::kernels::scalar
