#include "wnlab/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wnlab {

PrefixIntegrator::PrefixIntegrator(const Grid& g,
                                   const std::vector<double>& cell_values)
    : grid_(&g), vals_(&cell_values) {
  if (cell_values.size() != g.size())
    throw std::invalid_argument("prefix integrator: size mismatch");
  prefix_.resize(g.size() + 1);
  prefix_[0] = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    prefix_[i + 1] = prefix_[i] + g.widths[i] * cell_values[i];
}

double PrefixIntegrator::prefix_at(double x) const {
  const auto& e = grid_->edges;
  if (x <= e.front()) return 0.0;
  if (x >= e.back()) return prefix_.back();
  const std::size_t i = grid_->cell_of(x);
  return prefix_[i] + (x - e[i]) * (*vals_)[i];
}

double PrefixIntegrator::integral(double lo, double hi) const {
  if (hi <= lo) return 0.0;
  return prefix_at(hi) - prefix_at(lo);
}

double PrefixIntegrator::average(double lo, double hi) const {
  const double a = std::max(lo, grid_->edges.front());
  const double b = std::min(hi, grid_->edges.back());
  if (b <= a) return 0.0;
  return integral(a, b) / (b - a);
}

DyadicFamily::DyadicFamily(double lo, double len, int d, std::vector<double> sh)
    : root_lo(lo), root_len(len), depth(d), shifts(std::move(sh)) {
  if (!(len > 0.0)) throw std::invalid_argument("dyadic family: root length must be positive");
  if (d < 1) throw std::invalid_argument("dyadic family: depth must be >= 1");
  if (shifts.empty()) shifts.push_back(0.0);
}

Interval DyadicFamily::cube(int level, long index, double shift) const {
  const double len = std::ldexp(root_len, -level);
  const double lo = root_lo + shift + index * len;
  return {lo, lo + len};
}

IntervalFamily DyadicFamily::sets(bool include_root) const {
  IntervalFamily fam;
  fam.descriptor = "dyadic[" + std::to_string(root_lo) + "," +
                   std::to_string(root_lo + root_len) + "] depth " +
                   std::to_string(depth) + " shifts " +
                   std::to_string(shifts.size());
  for (double s : shifts) {
    const int l0 = include_root ? 0 : 1;
    for (int l = l0; l <= depth; ++l)
      for (long k = 0; k < cubes_at(l); ++k) fam.sets.push_back(cube(l, k, s));
  }
  return fam;
}

IntervalFamily all_grid_intervals(const Grid& g, std::size_t stride) {
  if (stride == 0) stride = 1;
  IntervalFamily fam;
  fam.descriptor = "grid-intervals stride " + std::to_string(stride);
  const auto& e = g.edges;
  for (std::size_t i = 0; i < e.size(); i += stride)
    for (std::size_t j = i + stride; j < e.size(); j += stride)
      fam.sets.push_back({e[i], e[j]});
  return fam;
}

IntervalFamily origin_anchored_family(const Grid& g) {
  IntervalFamily fam;
  fam.descriptor = "origin-anchored (0,b)";
  for (double e : g.edges)
    if (e > 0.0) fam.sets.push_back({0.0, e});
  return fam;
}

IntervalFamily coordinate_dyadic_family(const Grid& g, int depth,
                                        bool one_third_shift) {
  IntervalFamily fam;
  fam.descriptor = std::string("coordinate-dyadic depth ") + std::to_string(depth) +
                   (one_third_shift ? " +third-shift" : "");
  const double R = g.extent;
  for (int l = 0; l <= depth; ++l) {
    const double len = std::ldexp(2.0 * R, -l);
    const long n = 1L << l;
    std::vector<double> sh{0.0};
    if (one_third_shift && l > 0) sh.push_back(len / 3.0);
    for (double s : sh) {
      for (long k = 0; k < n; ++k) {
        const double lo = -R + s + k * len;
        if (lo >= R) continue;
        // skip cubes that cannot hold more than one node
        const std::size_t c = g.cell_of(lo + 0.5 * len);
        if (len < 0.75 * g.widths[c]) continue;
        fam.sets.push_back({lo, lo + len});
      }
    }
  }
  return fam;
}

}  // namespace wnlab
