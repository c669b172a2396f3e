#include "wnlab/operators/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wnlab::ops {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// exact sign of p1*p2 - p3*p4 (error-free via fma residuals)
inline int prod_diff_sign(double p1, double p2, double p3, double p4) {
  const double w = p3 * p4;
  const double e = std::fma(p3, p4, -w);
  const double f = std::fma(p1, p2, -w);
  const double d = f - e;
  return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
}

// slope(q,a) <= slope(q,b), all x-offsets positive
inline bool slope_le(double qx, double qy, double ax, double ay, double bx,
                     double by) {
  return prod_diff_sign(ay - qy, bx - qx, by - qy, ax - qx) <= 0;
}

inline double slope(const std::vector<double>& x, const std::vector<double>& S,
                    std::size_t i, std::size_t b) {
  return (S[b] - S[i]) / (x[b] - x[i]);
}

}  // namespace

std::vector<double> max_forward_slopes(const std::vector<double>& x,
                                       const std::vector<double>& S) {
  const std::size_t n = x.size();
  std::vector<double> r(n, kNegInf);
  std::vector<std::size_t> hull;  // indices; back() is the leftmost vertex
  hull.reserve(n);
  for (std::size_t ii = n; ii-- > 0;) {
    if (!hull.empty()) {
      while (hull.size() >= 2) {
        const std::size_t a = hull[hull.size() - 1];
        const std::size_t b = hull[hull.size() - 2];
        if (slope_le(x[ii], S[ii], x[a], S[a], x[b], S[b]))
          hull.pop_back();
        else
          break;
      }
      // first hull edge attains the max; probe a neighbor to absorb rounding ties
      double best = slope(x, S, ii, hull.back());
      if (hull.size() >= 2)
        best = std::max(best, slope(x, S, ii, hull[hull.size() - 2]));
      r[ii] = best;
    }
    hull.push_back(ii);
  }
  return r;
}

std::vector<double> maximal_values(const std::vector<double>& abs_f,
                                   const std::vector<double>& widths,
                                   const std::vector<double>& nodes) {
  const std::size_t n = abs_f.size();
  std::vector<double> S(n);  // integral of |f| over [left edge, x_i]
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    S[i] = acc + 0.5 * widths[i] * abs_f[i];
    acc += widths[i] * abs_f[i];
  }
  std::vector<double> right = max_forward_slopes(nodes, S);

  // left-anchored maxima via the reflection (x, S) -> (-x, -S), reversed
  std::vector<double> xr(n), Sr(n);
  for (std::size_t i = 0; i < n; ++i) {
    xr[i] = -nodes[n - 1 - i];
    Sr[i] = -S[n - 1 - i];
  }
  std::vector<double> leftr = max_forward_slopes(xr, Sr);

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::max({abs_f[i], right[i], leftr[n - 1 - i]});
  return out;
}

SampledFunction hl_maximal(const SampledFunction& f) {
  const auto& g = f.grid();
  std::vector<double> a(f.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::fabs(f.value(i));
  const bool compact = compactly_supported(f);
  SampledFunction out(f.grid_ptr(), maximal_values(a, g.widths, g.nodes));
  if (compact && g.extent > 2.0) out.attach_calibrated_tail(0.0, 1.0);
  return out;
}

SampledFunction iterated_maximal(const SampledFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("iterated maximal: k must be >= 1");
  const bool compact = compactly_supported(f);
  SampledFunction out = hl_maximal(f);
  for (int i = 1; i < k; ++i) {
    out.clear_tail();
    out = hl_maximal(out);
  }
  if (compact && f.grid().extent > 2.0) {
    out.clear_tail();
    out.attach_calibrated_tail(static_cast<double>(k - 1), 1.0);
  }
  return out;
}

bool compactly_supported(const SampledFunction& f) {
  if (f.tail()) return false;
  const auto& g = f.grid();
  const double half = 0.5 * g.extent;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::fabs(g.nodes[i]) > half && f.value(i) != 0.0) return false;
  return true;
}

}  // namespace wnlab::ops
