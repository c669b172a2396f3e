#include "wnlab/operators/strong.hpp"

#include <cmath>

#include "wnlab/kernels.hpp"
#include "wnlab/operators/maximal.hpp"

namespace wnlab::ops {

StrongMaximalResult strong_maximal_2d(const SampledFunction2D& F) {
  const auto& gx = *F.grid_x;
  const auto& gy = *F.grid_y;
  const std::size_t nx = F.nx(), ny = F.ny();

  std::vector<double> absF(nx * ny);
  for (std::size_t i = 0; i < absF.size(); ++i) absF[i] = std::fabs(F.values[i]);

  // per-column prefix of |F| at y-nodes (half cell at the evaluation node)
  std::vector<double> Sy(nx * ny);
  {
    std::vector<double> acc(nx, 0.0);
    for (std::size_t iy = 0; iy < ny; ++iy)
      for (std::size_t ix = 0; ix < nx; ++ix) {
        const double m = gy.widths[iy] * absF[iy * nx + ix];
        Sy[iy * nx + ix] = acc[ix] + 0.5 * m;
        acc[ix] += m;
      }
  }

  SampledFunction2D cert(F.grid_x, F.grid_y, absF);  // degenerate point rectangles
  std::vector<double> gJ(nx);

  // x-interval maxima along every y-degenerate strip
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) gJ[ix] = absF[iy * nx + ix];
    const auto rowvals = maximal_values(gJ, gx.widths, gx.nodes);
    kernels::max_accumulate(&cert.values[iy * nx], rowvals.data(), nx);
  }

  // full rectangles: for each y-interval J, maximize over x-intervals and
  // fold the result into every row J covers
  for (std::size_t c = 0; c + 1 < ny; ++c) {
    for (std::size_t d = c + 1; d < ny; ++d) {
      const double len = gy.nodes[d] - gy.nodes[c];
      for (std::size_t ix = 0; ix < nx; ++ix)
        gJ[ix] = (Sy[d * nx + ix] - Sy[c * nx + ix]) / len;
      const auto rowvals = maximal_values(gJ, gx.widths, gx.nodes);
      for (std::size_t iy = c; iy <= d; ++iy)
        kernels::max_accumulate(&cert.values[iy * nx], rowvals.data(), nx);
    }
  }

  // iterated one-dimensional bound M_y(M_x F)
  SampledFunction2D bound(F.grid_x, F.grid_y, absF);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) gJ[ix] = absF[iy * nx + ix];
    const auto rowvals = maximal_values(gJ, gx.widths, gx.nodes);
    for (std::size_t ix = 0; ix < nx; ++ix) bound.values[iy * nx + ix] = rowvals[ix];
  }
  std::vector<double> col(ny);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) col[iy] = bound.values[iy * nx + ix];
    const auto colvals = maximal_values(col, gy.widths, gy.nodes);
    for (std::size_t iy = 0; iy < ny; ++iy) bound.values[iy * nx + ix] = colvals[iy];
  }

  return {std::move(cert), std::move(bound)};
}

}  // namespace wnlab::ops
