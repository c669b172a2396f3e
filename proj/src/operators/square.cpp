#include "wnlab/operators/square.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wnlab::ops {

namespace {

struct Task {
  double lo, hi;
  int level;
  double parent_avg;
};

}  // namespace

SampledFunction dyadic_square(const SampledFunction& f, const DyadicFamily& D) {
  const auto& g = f.grid();
  const double root_lo = D.root_lo;
  const double root_hi = D.root_lo + D.root_len;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.value(i) != 0.0 && (g.nodes[i] < root_lo || g.nodes[i] >= root_hi))
      throw std::invalid_argument("dyadic square: support escapes the root cube");

  PrefixIntegrator pre(g, f.values());
  const auto& nodes = g.nodes;
  std::vector<double> acc(f.size(), 0.0);

  // descend the lattice, pruning cubes that contain no node (their
  // descendants cannot either); indices are never materialized, so the
  // depth may exceed the width of any integer type
  std::vector<Task> stack;
  for (double shift : D.shifts) {
    const double lo = root_lo + shift;
    const double hi = root_hi + shift;
    const double root_avg = pre.integral(lo, hi) / (hi - lo);
    const double mid = 0.5 * (lo + hi);
    stack.push_back({lo, mid, 1, root_avg});
    stack.push_back({mid, hi, 1, root_avg});
    while (!stack.empty()) {
      const Task t = stack.back();
      stack.pop_back();
      const auto first = std::lower_bound(nodes.begin(), nodes.end(), t.lo);
      const auto last = std::lower_bound(nodes.begin(), nodes.end(), t.hi);
      if (first >= last) continue;
      const double avg = pre.integral(t.lo, t.hi) / (t.hi - t.lo);
      const double d = avg - t.parent_avg;
      if (d != 0.0)
        for (auto it = first; it != last; ++it) acc[it - nodes.begin()] += d * d;
      if (t.level < D.depth) {
        const double m = 0.5 * (t.lo + t.hi);
        if (m > t.lo && m < t.hi) {
          stack.push_back({t.lo, m, t.level + 1, avg});
          stack.push_back({m, t.hi, t.level + 1, avg});
        }
      }
    }
  }
  for (double& a : acc) a = std::sqrt(a);
  return SampledFunction(f.grid_ptr(), std::move(acc));
}

}  // namespace wnlab::ops
