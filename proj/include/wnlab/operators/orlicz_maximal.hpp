#pragma once

// Orlicz maximal operator: pointwise max of localized Luxemburg norms over
// the sets of a finite interval family.

#include "wnlab/intervals.hpp"
#include "wnlab/orlicz.hpp"
#include "wnlab/sampled.hpp"

namespace wnlab::ops {

SampledFunction orlicz_maximal(const SampledFunction& f, const OrliczGauge& gauge,
                               const IntervalFamily& fam);

}  // namespace wnlab::ops
