#pragma once

// Maximal operators over generic set families (Muckenhoupt bases). Points
// covered by no member get the value 0.

#include <optional>
#include <string>

#include "wnlab/intervals.hpp"
#include "wnlab/sampled.hpp"

namespace wnlab::ops {

enum class BasisKind { intervals, origin_anchored, rectangles_2d, dyadic };

struct Basis {
  BasisKind kind = BasisKind::intervals;
  std::size_t stride = 1;                  // intervals enumeration stride
  std::optional<DyadicFamily> lattice;     // for the dyadic kind

  static Basis intervals(std::size_t stride = 1);
  static Basis origin_anchored();
  static Basis rectangles_2d();
  static Basis dyadic(DyadicFamily fam);

  std::string name() const;
  // finite enumeration for the 1-D kinds; rectangles_2d cannot be listed here
  IntervalFamily enumerate(const Grid& g) const;
};

// pointwise max of |f|-averages over the family sets containing x
SampledFunction family_maximal(const SampledFunction& f, const IntervalFamily& fam);

SampledFunction basis_maximal(const SampledFunction& f, const Basis& B);

// the Calderon operator N f(t) = sup_{b>t} (1/b) int_0^b |f|, exact O(N) scan
SampledFunction calderon_maximal(const SampledFunction& f);

}  // namespace wnlab::ops
