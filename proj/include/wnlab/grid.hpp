#pragma once

// 1-D quadrature grids on [-R, R]: midpoint cells, optionally uniform on a
// core [-a, a] with geometric cells (constant width ratio) out to the extent.
// The geometric tails are what make effective extents like 2^20 affordable.

#include <cstddef>
#include <memory>
#include <vector>

namespace wnlab {

enum class GridKind { uniform, geometric, hybrid };

struct Grid {
  std::vector<double> edges;   // cell boundaries, size() + 1, strictly increasing
  std::vector<double> nodes;   // cell midpoints
  std::vector<double> widths;  // cell widths, all > 0
  GridKind kind = GridKind::uniform;
  double extent = 0.0;          // R
  double core_halfwidth = 0.0;  // a
  double ratio = 1.0;           // geometric width ratio (1 for uniform)

  std::size_t size() const { return nodes.size(); }
  double measure() const { return edges.back() - edges.front(); }

  // index of the cell containing x (clamped to [0, size()-1])
  std::size_t cell_of(double x) const;
};

using GridPtr = std::shared_ptr<const Grid>;

// kind == uniform: core_halfwidth must equal extent, ratio ignored.
// kind == geometric/hybrid: uniform core of core_points cells on [-a, a],
// geometric cells with the given width ratio from a out to R (mirrored).
GridPtr build_grid(GridKind kind, double core_halfwidth, double extent,
                   int core_points, double ratio = 1.05);

// expected number of geometric cells per side for the hybrid construction,
// from the geometric-sum formula (exposed so callers can size grids upfront)
int hybrid_tail_cells(double core_halfwidth, double extent, int core_points,
                      double ratio);

// Grid on [-2^jmax, 2^jmax] whose cell boundaries hit every power of two
// 2^j, jmin <= j <= jmax, exactly; each octave is split into cells_per_octave
// geometric cells and [-2^jmin, 2^jmin] is one pair of uniform cells.
// Used where sampled data must align with dyadic decompositions.
GridPtr build_dyadic_aligned_grid(int jmin, int jmax, int cells_per_octave);

}  // namespace wnlab
