#include "wnlab/operators/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wnlab/kernels.hpp"
#include "wnlab/operators/maximal.hpp"

namespace wnlab::ops {

Basis Basis::intervals(std::size_t stride) {
  Basis b;
  b.kind = BasisKind::intervals;
  b.stride = stride;
  return b;
}

Basis Basis::origin_anchored() {
  Basis b;
  b.kind = BasisKind::origin_anchored;
  return b;
}

Basis Basis::rectangles_2d() {
  Basis b;
  b.kind = BasisKind::rectangles_2d;
  return b;
}

Basis Basis::dyadic(DyadicFamily fam) {
  Basis b;
  b.kind = BasisKind::dyadic;
  b.lattice = std::move(fam);
  return b;
}

std::string Basis::name() const {
  switch (kind) {
    case BasisKind::intervals: return "intervals";
    case BasisKind::origin_anchored: return "origin-anchored";
    case BasisKind::rectangles_2d: return "rectangles-2d";
    case BasisKind::dyadic: return "dyadic";
  }
  return "?";
}

IntervalFamily Basis::enumerate(const Grid& g) const {
  switch (kind) {
    case BasisKind::intervals: return all_grid_intervals(g, stride);
    case BasisKind::origin_anchored: return origin_anchored_family(g);
    case BasisKind::dyadic: return lattice->sets(true);
    case BasisKind::rectangles_2d:
      throw std::invalid_argument("basis: rectangles_2d has no 1-D enumeration");
  }
  throw std::invalid_argument("basis: unknown kind");
}

SampledFunction family_maximal(const SampledFunction& f, const IntervalFamily& fam) {
  const auto& g = f.grid();
  std::vector<double> absf(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::fabs(f.value(i));
  PrefixIntegrator pre(g, absf);

  std::vector<double> out(f.size(), 0.0);
  const auto& nodes = g.nodes;
  for (const auto& Q : fam.sets) {
    const double a = std::max(Q.lo, g.edges.front());
    const double b = std::min(Q.hi, g.edges.back());
    if (!(b > a)) continue;
    const double avg = pre.integral(a, b) / Q.length();
    if (avg <= 0.0) continue;
    const auto lo = std::lower_bound(nodes.begin(), nodes.end(), Q.lo);
    const auto hi = std::lower_bound(nodes.begin(), nodes.end(), Q.hi);
    if (lo >= hi) continue;
    kernels::max_fill(out.data() + (lo - nodes.begin()), avg,
                      static_cast<std::size_t>(hi - lo));
  }
  return SampledFunction(f.grid_ptr(), std::move(out));
}

SampledFunction calderon_maximal(const SampledFunction& f) {
  const auto& g = f.grid();
  std::vector<double> absf(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::fabs(f.value(i));
  PrefixIntegrator pre(g, absf);

  // v_k = P(e_k)/e_k over positive edges; N f(x_i) = max over edges > x_i
  const auto& e = g.edges;
  std::vector<double> suffix(e.size(), 0.0);
  double running = 0.0;
  for (std::size_t k = e.size(); k-- > 0;) {
    if (e[k] > 0.0) running = std::max(running, pre.integral(0.0, e[k]) / e[k]);
    suffix[k] = running;
  }
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = g.nodes[i];
    if (x <= 0.0) continue;
    auto it = std::upper_bound(e.begin(), e.end(), x);
    if (it != e.end()) out[i] = suffix[it - e.begin()];
  }
  SampledFunction res(f.grid_ptr(), std::move(out));
  if (compactly_supported(f) && g.extent > 2.0 && res.values().back() > 0.0)
    res.attach_calibrated_tail(0.0, 1.0, /*sides=*/1);
  return res;
}

SampledFunction basis_maximal(const SampledFunction& f, const Basis& B) {
  switch (B.kind) {
    case BasisKind::intervals: {
      if (B.stride == 1) {
        SampledFunction m = hl_maximal(f);
        m.clear_tail();
        return m;
      }
      return family_maximal(f, B.enumerate(f.grid()));
    }
    case BasisKind::origin_anchored: {
      SampledFunction m = calderon_maximal(f);
      m.clear_tail();
      return m;
    }
    case BasisKind::dyadic:
      return family_maximal(f, B.enumerate(f.grid()));
    case BasisKind::rectangles_2d:
      throw std::invalid_argument("basis_maximal: rectangles_2d acts on 2-D data");
  }
  throw std::invalid_argument("basis_maximal: unknown kind");
}

}  // namespace wnlab::ops
