#include "wnlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wnlab/operators/maximal.hpp"

namespace wnlab::weights {

Weight::Weight(SampledFunction base, double floor)
    : base_(std::move(base)), floor_(floor) {
  if (!(floor > 0.0)) throw std::invalid_argument("weight: floor must be positive");
  auto& v = base_.mutable_values();
  for (double& x : v) x = std::max(x, floor);
  base_.clear_tail();
}

std::vector<double> Weight::dual_values(double p) const {
  if (!(p > 1.0)) throw std::invalid_argument("weight: dual exponent needs p > 1");
  const double pp = p / (p - 1.0);
  return power_values(1.0 - pp);
}

std::vector<double> Weight::power_values(double e) const {
  std::vector<double> out(values().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(std::pow(values()[i], e), floor_);
  return out;
}

Weight power_weight(GridPtr grid, double exponent, double floor) {
  if (!(exponent > -1.0))
    throw std::invalid_argument(
        "power weight: exponent must exceed -1 (local integrability)");
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = std::pow(std::fabs(grid->nodes[i]), exponent);
  return Weight(SampledFunction(std::move(grid), std::move(v)), floor);
}

namespace {

// scans a family maximizing a per-set functional built from two averages
template <typename Fn>
WeightConstantReport scan(const Grid& g, const IntervalFamily& fam, Fn&& per_set,
                          ConstantKind kind) {
  if (fam.sets.empty()) throw std::invalid_argument("weight constant: empty family");
  WeightConstantReport rep;
  rep.kind = kind;
  rep.family = fam.descriptor;
  rep.value = 0.0;
  bool any = false;
  for (const auto& Q : fam.sets) {
    const double a = std::max(Q.lo, g.edges.front());
    const double b = std::min(Q.hi, g.edges.back());
    if (!(b > a)) continue;
    const double v = per_set(a, b);
    if (!any || v > rep.value) {
      rep.value = v;
      rep.attaining = Q;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("weight constant: family misses the grid");
  return rep;
}

}  // namespace

WeightConstantReport ap_constant(const Weight& w, double p,
                                 const IntervalFamily& fam) {
  if (!(p > 1.0)) throw std::invalid_argument("ap_constant: requires p > 1");
  const auto& g = w.grid();
  PrefixIntegrator pw(g, w.values());
  const auto sigma = w.dual_values(p);
  PrefixIntegrator ps(g, sigma);
  auto rep = scan(
      g, fam,
      [&](double a, double b) {
        return pw.average(a, b) * std::pow(ps.average(a, b), p - 1.0);
      },
      ConstantKind::Ap);
  rep.p = p;
  return rep;
}

WeightConstantReport a1_constant(const Weight& w) {
  const auto& g = w.grid();
  const SampledFunction mw = ops::hl_maximal(w.base());
  WeightConstantReport rep;
  rep.kind = ConstantKind::A1;
  rep.family = "grid nodes";
  rep.p = 1.0;
  rep.value = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = mw.value(i) / w.values()[i];
    if (r > rep.value) {
      rep.value = r;
      rep.attaining = {g.nodes[i], g.nodes[i]};
    }
  }
  return rep;
}

WeightConstantReport ainf_fujii_wilson(const Weight& w,
                                       const IntervalFamily& fam) {
  const auto& g = w.grid();
  auto per_set = [&](double a, double b) {
    const std::size_t i0 = g.cell_of(a);
    const std::size_t i1 = g.cell_of(std::nextafter(b, a));
    std::vector<double> tw, vals, nodes;
    tw.reserve(i1 - i0 + 1);
    for (std::size_t i = i0; i <= i1; ++i) {
      const double lo = std::max(a, g.edges[i]);
      const double hi = std::min(b, g.edges[i + 1]);
      if (!(hi > lo)) continue;
      tw.push_back(hi - lo);
      vals.push_back(w.values()[i]);
      nodes.push_back(0.5 * (lo + hi));
    }
    if (tw.empty()) return 0.0;
    const auto m = ops::maximal_values(vals, tw, nodes);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < tw.size(); ++i) {
      num += tw[i] * m[i];
      den += tw[i] * vals[i];
    }
    return num / den;
  };
  auto rep = scan(g, fam, per_set, ConstantKind::AinfFW);
  return rep;
}

WeightConstantReport apq_constant(const Weight& w, double p, double q,
                                  const IntervalFamily& fam) {
  if (!(p > 1.0)) throw std::invalid_argument("apq_constant: requires p > 1");
  if (!(q > 0.0)) throw std::invalid_argument("apq_constant: requires q > 0");
  const auto& g = w.grid();
  const double pp = p / (p - 1.0);
  PrefixIntegrator pq(g, w.power_values(q));
  PrefixIntegrator pd(g, w.power_values(-pp));
  auto rep = scan(
      g, fam,
      [&](double a, double b) {
        return pq.average(a, b) * std::pow(pd.average(a, b), q / pp);
      },
      ConstantKind::Apq);
  rep.p = p;
  rep.q = q;
  return rep;
}

}  // namespace wnlab::weights
