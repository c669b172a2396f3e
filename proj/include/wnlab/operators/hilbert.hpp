#pragma once

// Principal-value quadrature of the Hilbert transform and its iterated
// commutators with the symbol b(x) = log|x|. Midpoint nodes never coincide,
// so the j == i term is simply skipped (symmetric-window principal value).

#include "wnlab/sampled.hpp"

namespace wnlab::ops {

SampledFunction hilbert(const SampledFunction& f);

// T_b^k with T_b^0 = H, T_b^k = b T_b^{k-1} - T_b^{k-1}(b .); k >= 1
SampledFunction commutator_k(const SampledFunction& f, int k);

}  // namespace wnlab::ops
