#pragma once

// Rubio de Francia iteration R(h) = sum_k 2^-k M^k(h) / ||M||^k, truncated at
// K terms with explicit residual accounting, and the Coifman-Fefferman-type
// chain check that bridges weighted bounds to unweighted operator norms.

#include <functional>
#include <string>
#include <vector>

#include "wnlab/sampled.hpp"

namespace wnlab::rdf {

struct RdFResult {
  SampledFunction output;    // truncated series
  SampledFunction last_term; // M^K(h), for the explicit truncation correction
  double p = 0.0;            // exponent used in the normalization
  int K = 0;
  double m_norm = 0.0;       // the ||M||_p over-estimate used
  double residual_bound = 0.0;  // 2^(-K+1) ||h||_p
};

// default truncation: ceil(log2(1/tol)) + 1 for tol = 1e-6
int default_truncation();

// h >= 0 and not identically zero; p > 1; m_norm > 0 is the modeled ||M||_p
RdFResult rdf_iterate(const SampledFunction& h, double p, int K, double m_norm);

// same series normalized with ||M||_{p'}; caller passes the model at p'
RdFResult rdf_dual_iterate(const SampledFunction& h, double p, int K,
                           double m_norm_dual);

struct CfChainRow {
  double p = 0.0;
  double max_ratio = 0.0;
  std::string attaining;
};

struct CfChainReport {
  std::vector<CfChainRow> rows;
  double slope = 0.0;   // of log max_ratio against -log(p-1)
  bool pass = false;    // |slope| <= slope_tol (ratios stay bounded)
  std::string branch;   // "cf" (p < p0) or "cf-dual" (p > p0)
  double beta = 0.0;
  double p0 = 0.0;
};

using OperatorFn = std::function<SampledFunction(const SampledFunction&)>;
using NormModel = std::function<double(double)>;  // p -> measured ||M||_p

// For each p and test function computes ||Tf||_p / (budget(p) ||f||_p) with
// budget = ||M||_p^(beta (p0-p)) on the p < p0 branch and
// ||M||_{p'}^(beta (p-p0)/(p-1)) on the p > p0 branch, then checks that the
// max ratio shows no growth trend toward the endpoint.
CfChainReport cf_chain_check(const OperatorFn& T, double p0, double beta,
                             const std::vector<double>& ps,
                             const std::vector<SampledFunction>& test_fns,
                             const NormModel& m_norm, double slope_tol = 0.1);

}  // namespace wnlab::rdf
