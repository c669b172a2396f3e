#include "wnlab/rdf.hpp"

#include <cmath>
#include <stdexcept>

#include "wnlab/kernels.hpp"
#include "wnlab/norms.hpp"
#include "wnlab/normlab.hpp"
#include "wnlab/operators/maximal.hpp"

namespace wnlab::rdf {

int default_truncation() {
  return static_cast<int>(std::ceil(std::log2(1e6))) + 1;  // tol = 1e-6
}

RdFResult rdf_iterate(const SampledFunction& h, double p, int K, double m_norm) {
  if (!(p > 1.0)) throw std::invalid_argument("rdf: requires p > 1");
  if (K < 1) throw std::invalid_argument("rdf: truncation K must be >= 1");
  if (!(m_norm > 0.0)) throw std::invalid_argument("rdf: norm estimate must be positive");
  bool nonzero = false;
  for (double v : h.values()) {
    if (v < 0.0) throw std::invalid_argument("rdf: h must be nonnegative");
    nonzero = nonzero || v > 0.0;
  }
  if (!nonzero) throw std::invalid_argument("rdf: h must not vanish identically");

  std::vector<double> acc = h.values();
  SampledFunction term(h.grid_ptr(), h.values());
  const double step = 0.5 / m_norm;
  double factor = 1.0;
  for (int k = 1; k <= K; ++k) {
    term = ops::hl_maximal(term);
    term.clear_tail();
    factor *= step;
    kernels::scaled_accumulate(acc.data(), term.values().data(), factor,
                               acc.size());
  }

  RdFResult res{SampledFunction(h.grid_ptr(), std::move(acc)),
                std::move(term),
                p,
                K,
                m_norm,
                0.0};
  res.residual_bound = std::pow(2.0, 1 - K) * lp_norm(h, p);
  return res;
}

RdFResult rdf_dual_iterate(const SampledFunction& h, double p, int K,
                           double m_norm_dual) {
  RdFResult res = rdf_iterate(h, p, K, m_norm_dual);
  res.p = p / (p - 1.0);
  return res;
}

CfChainReport cf_chain_check(const OperatorFn& T, double p0, double beta,
                             const std::vector<double>& ps,
                             const std::vector<SampledFunction>& test_fns,
                             const NormModel& m_norm, double slope_tol) {
  if (ps.size() < 2) throw std::invalid_argument("cf chain: need at least two exponents");
  if (test_fns.empty()) throw std::invalid_argument("cf chain: empty test set");
  bool below = true, above = true;
  for (double p : ps) {
    below = below && p < p0;
    above = above && p > p0;
  }
  if (!below && !above)
    throw std::invalid_argument("cf chain: exponents must stay on one side of p0");

  CfChainReport rep;
  rep.branch = below ? "cf" : "cf-dual";
  rep.beta = beta;
  rep.p0 = p0;

  std::vector<SampledFunction> images;
  images.reserve(test_fns.size());
  for (const auto& f : test_fns) images.push_back(T(f));

  for (double p : ps) {
    double budget;
    if (below) {
      budget = std::pow(m_norm(p), beta * (p0 - p));
    } else {
      const double pd = p / (p - 1.0);
      budget = std::pow(m_norm(pd), beta * (p - p0) / (p - 1.0));
    }
    CfChainRow row;
    row.p = p;
    for (std::size_t i = 0; i < test_fns.size(); ++i) {
      const double num = lp_norm(images[i], p);
      const double den = lp_norm(test_fns[i], p);
      if (den <= 0.0) continue;
      const double r = num / (budget * den);
      if (r > row.max_ratio) {
        row.max_ratio = r;
        row.attaining = "f" + std::to_string(i);
      }
    }
    rep.rows.push_back(row);
  }

  std::vector<double> xs, ys;
  for (const auto& row : rep.rows) {
    xs.push_back(below ? -std::log(row.p - 1.0) : std::log(row.p));
    ys.push_back(std::log(row.max_ratio));
  }
  rep.slope = normlab::fit_loglog(xs, ys).slope;
  rep.pass = std::fabs(rep.slope) <= slope_tol;
  return rep;
}

}  // namespace wnlab::rdf
