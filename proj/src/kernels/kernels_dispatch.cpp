#include "wnlab/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wnlab::kernels {

bool avx2_supported() {
#if defined(WNLAB_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend resolve_initial() {
  if (const char* env = std::getenv("WNLAB_SIMD")) {
    std::string s(env);
    if (s == "scalar") return Backend::scalar;
    if (s == "avx2") {
      if (!avx2_supported())
        throw std::runtime_error("WNLAB_SIMD=avx2 requested but AVX2 is unavailable");
      return Backend::avx2;
    }
    // "auto" or anything else falls through to detection
  }
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Backend& state() {
  static Backend b = resolve_initial();
  return b;
}

}  // namespace

Backend active() { return state(); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported())
    throw std::runtime_error("AVX2 backend unavailable on this host");
  state() = b;
}

std::string backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

#ifdef WNLAB_HAVE_AVX2_TU
#define WNLAB_DISPATCH(fn, ...) \
  return active() == Backend::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#define WNLAB_DISPATCH_VOID(fn, ...)                  \
  if (active() == Backend::avx2)                      \
    avx2::fn(__VA_ARGS__);                            \
  else                                                \
    scalar::fn(__VA_ARGS__)
#else
#define WNLAB_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#define WNLAB_DISPATCH_VOID(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double cauchy_sum(const double* x, const double* g, std::size_t n, double x0) {
  WNLAB_DISPATCH(cauchy_sum, x, g, n, x0);
}

double weighted_abs_pow_sum(const double* w, const double* v, std::size_t n,
                            double p, double inv_scale) {
  WNLAB_DISPATCH(weighted_abs_pow_sum, w, v, n, p, inv_scale);
}

double abs_max(const double* v, std::size_t n) {
  WNLAB_DISPATCH(abs_max, v, n);
}

void max_accumulate(double* dst, const double* src, std::size_t n) {
  WNLAB_DISPATCH_VOID(max_accumulate, dst, src, n);
}

void max_fill(double* dst, double c, std::size_t n) {
  WNLAB_DISPATCH_VOID(max_fill, dst, c, n);
}

void scaled_accumulate(double* dst, const double* src, double a, std::size_t n) {
  WNLAB_DISPATCH_VOID(scaled_accumulate, dst, src, a, n);
}

}  // namespace wnlab::kernels
