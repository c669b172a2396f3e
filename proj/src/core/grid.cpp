#include "wnlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wnlab {

namespace {

void finalize(Grid& g) {
  const std::size_t n = g.edges.size() - 1;
  g.nodes.resize(n);
  g.widths.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes[i] = 0.5 * (g.edges[i] + g.edges[i + 1]);
    g.widths[i] = g.edges[i + 1] - g.edges[i];
    if (!(g.widths[i] > 0.0))
      throw std::invalid_argument("grid: degenerate cell (parameters too extreme)");
  }
}

}  // namespace

std::size_t Grid::cell_of(double x) const {
  auto it = std::upper_bound(edges.begin(), edges.end(), x);
  if (it == edges.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - edges.begin()) - 1;
  return std::min(i, nodes.size() - 1);
}

int hybrid_tail_cells(double a, double R, int core_points, double ratio) {
  if (R <= a) return 0;
  const double h = 2.0 * a / core_points;
  // smallest m with h*(r^m - 1)/(r - 1) >= R - a
  const double t = 1.0 + (R - a) * (ratio - 1.0) / h;
  return static_cast<int>(std::ceil(std::log(t) / std::log(ratio)));
}

GridPtr build_grid(GridKind kind, double a, double R, int core_points,
                   double ratio) {
  if (!(a > 0.0) || !(R > 0.0)) throw std::invalid_argument("grid: a, R must be positive");
  if (a > R) throw std::invalid_argument("grid: core_halfwidth exceeds extent");
  if (core_points < 2) throw std::invalid_argument("grid: core_points must be >= 2");
  if (core_points % 2 != 0) throw std::invalid_argument("grid: core_points must be even");
  if (kind == GridKind::uniform) {
    if (a != R) throw std::invalid_argument("grid: uniform kind requires core_halfwidth == extent");
  } else {
    if (!(ratio > 1.0) || ratio > 2.0)
      throw std::invalid_argument("grid: ratio must lie in (1, 2]");
  }

  auto g = std::make_shared<Grid>();
  g->kind = kind;
  g->extent = R;
  g->core_halfwidth = a;
  g->ratio = (kind == GridKind::uniform || a == R) ? 1.0 : ratio;

  const double h = 2.0 * a / core_points;
  std::vector<double> pos;  // boundaries on [0, R]
  pos.push_back(0.0);
  for (int i = 1; i <= core_points / 2; ++i) pos.push_back(i * h);
  pos.back() = a;

  if (a < R) {
    const int m = hybrid_tail_cells(a, R, core_points, ratio);
    // constant-ratio widths summing exactly to R - a; first width <= h
    const double w1 = (R - a) * (ratio - 1.0) / (std::pow(ratio, m) - 1.0);
    double w = w1;
    double e = a;
    for (int k = 0; k < m; ++k) {
      e += w;
      pos.push_back(e);
      w *= ratio;
    }
    pos.back() = R;
  }

  g->edges.reserve(2 * pos.size() - 1);
  for (std::size_t i = pos.size(); i-- > 1;) g->edges.push_back(-pos[i]);
  for (double p : pos) g->edges.push_back(p);
  finalize(*g);
  return g;
}

GridPtr build_dyadic_aligned_grid(int jmin, int jmax, int cells_per_octave) {
  if (jmin >= jmax) throw std::invalid_argument("grid: jmin must be below jmax");
  if (cells_per_octave < 1 || cells_per_octave > 16)
    throw std::invalid_argument("grid: cells_per_octave out of range");
  if (jmin < -1000) throw std::invalid_argument("grid: jmin underflows double range");

  auto g = std::make_shared<Grid>();
  auto& G = *g;
  G.kind = GridKind::hybrid;
  G.extent = std::ldexp(1.0, jmax);
  G.core_halfwidth = std::ldexp(1.0, jmin);
  G.ratio = std::exp2(1.0 / cells_per_octave);

  std::vector<double> pos;
  pos.push_back(0.0);
  pos.push_back(G.core_halfwidth);
  for (int j = jmin; j < jmax; ++j) {
    // boundaries 2^(j + k/cpo); octave endpoints are exact powers of two
    for (int k = 1; k < cells_per_octave; ++k)
      pos.push_back(std::ldexp(std::exp2(static_cast<double>(k) / cells_per_octave), j));
    pos.push_back(std::ldexp(1.0, j + 1));
  }
  G.edges.reserve(2 * pos.size() - 1);
  for (std::size_t i = pos.size(); i-- > 1;) G.edges.push_back(-pos[i]);
  for (double p : pos) G.edges.push_back(p);
  finalize(G);
  return g;
}

}  // namespace wnlab
