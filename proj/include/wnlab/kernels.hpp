#pragma once

// Data-parallel inner loops shared by the operator implementations.
// Every kernel has a scalar reference implementation and, on x86-64,
// an AVX2 variant. The active backend is resolved once at startup from
// cpuid and can be forced with WNLAB_SIMD=scalar|avx2|auto; the public
// entry points below route through that choice. Scalar and SIMD
// variants are equivalence-tested against each other in the test suite.

#include <cstddef>
#include <string>

namespace wnlab::kernels {

enum class Backend { scalar, avx2 };

Backend active();
void set_backend(Backend b);      // test hook; throws if unsupported
bool avx2_supported();
std::string backend_name(Backend b);

// sum_j g[j] / (x0 - x[j]); caller guarantees x0 != x[j]
double cauchy_sum(const double* x, const double* g, std::size_t n, double x0);

// sum_j w[j] * (|v[j]| * inv_scale)^p
double weighted_abs_pow_sum(const double* w, const double* v, std::size_t n,
                            double p, double inv_scale);

double abs_max(const double* v, std::size_t n);

// dst[i] = max(dst[i], src[i])
void max_accumulate(double* dst, const double* src, std::size_t n);

// dst[i] = max(dst[i], c)
void max_fill(double* dst, double c, std::size_t n);

// dst[i] += a * src[i]
void scaled_accumulate(double* dst, const double* src, double a, std::size_t n);

namespace scalar {
double cauchy_sum(const double* x, const double* g, std::size_t n, double x0);
double weighted_abs_pow_sum(const double* w, const double* v, std::size_t n,
                            double p, double inv_scale);
double abs_max(const double* v, std::size_t n);
void max_accumulate(double* dst, const double* src, std::size_t n);
void max_fill(double* dst, double c, std::size_t n);
void scaled_accumulate(double* dst, const double* src, double a, std::size_t n);
}  // namespace scalar

#ifdef WNLAB_HAVE_AVX2_TU
namespace avx2 {
double cauchy_sum(const double* x, const double* g, std::size_t n, double x0);
double weighted_abs_pow_sum(const double* w, const double* v, std::size_t n,
                            double p, double inv_scale);
double abs_max(const double* v, std::size_t n);
void max_accumulate(double* dst, const double* src, std::size_t n);
void max_fill(double* dst, double c, std::size_t n);
void scaled_accumulate(double* dst, const double* src, double a, std::size_t n);
}  // namespace avx2
#endif

}  // namespace wnlab::kernels
