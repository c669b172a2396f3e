#pragma once

// Weights and estimators for the Muckenhoupt-type constants. All suprema
// over "cubes" are maxima over an explicit finite interval family, so every
// reported value is a certified lower estimate of the continuum constant;
// the report carries the family used and the attaining set.

#include <string>

#include "wnlab/intervals.hpp"
#include "wnlab/sampled.hpp"

namespace wnlab::weights {

class Weight {
 public:
  explicit Weight(SampledFunction base, double floor = 1e-10);

  const SampledFunction& base() const { return base_; }
  const Grid& grid() const { return base_.grid(); }
  const std::vector<double>& values() const { return base_.values(); }
  double floor() const { return floor_; }

  // sigma = w^(1-p') pointwise, re-floored
  std::vector<double> dual_values(double p) const;
  // w^e pointwise, re-floored
  std::vector<double> power_values(double e) const;

 private:
  SampledFunction base_;
  double floor_;
};

Weight power_weight(GridPtr grid, double exponent, double floor = 1e-10);

enum class ConstantKind { Ap, A1, AinfFW, Apq, ApB };

struct WeightConstantReport {
  ConstantKind kind = ConstantKind::Ap;
  double value = 0.0;
  double p = 0.0;
  double q = 0.0;
  std::string family;
  Interval attaining{0.0, 0.0};
};

// max over the family of (avg_Q w)(avg_Q w^(1-p'))^(p-1); p > 1
WeightConstantReport ap_constant(const Weight& w, double p,
                                 const IntervalFamily& fam);

// sup over grid nodes of M(w)/w
WeightConstantReport a1_constant(const Weight& w);

// Fujii-Wilson: max over Q of (1/w(Q)) int_Q M(chi_Q w), with M restricted
// to subintervals of Q
WeightConstantReport ainf_fujii_wilson(const Weight& w, const IntervalFamily& fam);

// max over the family of (avg_Q w^q)(avg_Q w^(-p'))^(q/p'); p > 1, q > 0
WeightConstantReport apq_constant(const Weight& w, double p, double q,
                                  const IntervalFamily& fam);

}  // namespace wnlab::weights
