#include "wnlab/operators/orlicz_maximal.hpp"

#include <algorithm>

#include "wnlab/kernels.hpp"

namespace wnlab::ops {

SampledFunction orlicz_maximal(const SampledFunction& f, const OrliczGauge& gauge,
                               const IntervalFamily& fam) {
  const auto& g = f.grid();
  const auto& nodes = g.nodes;
  std::vector<double> out(f.size(), 0.0);
  for (const auto& Q : fam.sets) {
    if (Q.hi <= g.edges.front() || Q.lo >= g.edges.back()) continue;
    const auto lo = std::lower_bound(nodes.begin(), nodes.end(), Q.lo);
    const auto hi = std::lower_bound(nodes.begin(), nodes.end(), Q.hi);
    if (lo >= hi) continue;
    const double t = luxemburg_norm(f, gauge, Q);
    if (t <= 0.0) continue;
    kernels::max_fill(out.data() + (lo - nodes.begin()), t,
                      static_cast<std::size_t>(hi - lo));
  }
  return SampledFunction(f.grid_ptr(), std::move(out));
}

}  // namespace wnlab::ops
