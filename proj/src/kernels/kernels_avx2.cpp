#include "wnlab/kernels.hpp"

#ifdef WNLAB_HAVE_AVX2_TU

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace wnlab::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, shuf));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

double cauchy_sum(const double* x, const double* g, std::size_t n, double x0) {
  __m256d acc = _mm256_setzero_pd();
  __m256d vx0 = _mm256_set1_pd(x0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d d = _mm256_sub_pd(vx0, _mm256_loadu_pd(x + j));
    __m256d q = _mm256_div_pd(_mm256_loadu_pd(g + j), d);
    acc = _mm256_add_pd(acc, q);
  }
  double s = hsum(acc);
  for (; j < n; ++j) s += g[j] / (x0 - x[j]);
  return s;
}

double weighted_abs_pow_sum(const double* w, const double* v, std::size_t n,
                            double p, double inv_scale) {
  if (p == 1.0) {
    __m256d acc = _mm256_setzero_pd();
    __m256d sc = _mm256_set1_pd(inv_scale);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d a = _mm256_and_pd(_mm256_loadu_pd(v + j), kAbsMask);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + j), _mm256_mul_pd(a, sc), acc);
    }
    double s = hsum(acc);
    for (; j < n; ++j) s += w[j] * std::fabs(v[j]) * inv_scale;
    return s;
  }
  if (p == 2.0) {
    __m256d acc = _mm256_setzero_pd();
    __m256d sc = _mm256_set1_pd(inv_scale);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d a = _mm256_mul_pd(_mm256_loadu_pd(v + j), sc);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + j), _mm256_mul_pd(a, a), acc);
    }
    double s = hsum(acc);
    for (; j < n; ++j) {
      double a = v[j] * inv_scale;
      s += w[j] * a * a;
    }
    return s;
  }
  // general exponent stays scalar: pow dominates and has no vector form here
  return scalar::weighted_abs_pow_sum(w, v, n, p, inv_scale);
}

double abs_max(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(v + j), kAbsMask));
  double m = hmax(acc);
  for (; j < n; ++j) m = std::max(m, std::fabs(v[j]));
  return m;
}

void max_accumulate(double* dst, const double* src, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    _mm256_storeu_pd(dst + j, _mm256_max_pd(_mm256_loadu_pd(dst + j),
                                            _mm256_loadu_pd(src + j)));
  for (; j < n; ++j) dst[j] = std::max(dst[j], src[j]);
}

void max_fill(double* dst, double c, std::size_t n) {
  __m256d vc = _mm256_set1_pd(c);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    _mm256_storeu_pd(dst + j, _mm256_max_pd(_mm256_loadu_pd(dst + j), vc));
  for (; j < n; ++j) dst[j] = std::max(dst[j], c);
}

void scaled_accumulate(double* dst, const double* src, double a, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    _mm256_storeu_pd(dst + j, _mm256_fmadd_pd(va, _mm256_loadu_pd(src + j),
                                              _mm256_loadu_pd(dst + j)));
  for (; j < n; ++j) dst[j] += a * src[j];
}

}  // namespace wnlab::kernels::avx2

#endif  // WNLAB_HAVE_AVX2_TU
