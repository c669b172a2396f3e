#pragma once

// Real-space kernel of the Bochner-Riesz multiplier at the critical order
// lambda = (n-1)/2, and the endpoint integral over the set where the
// oscillating kernel factor stays away from zero.

namespace wnlab::ops {

// K_lambda(x) = Gamma(lambda+1)/pi^lambda * J_{n/2+lambda}(2 pi |x|) / |x|^{n/2+lambda}
double br_kernel(double lambda, int n, double x);

// int over A ∩ (r1, R) of r^(-p) dr, with A the union of intervals where
// |cos(r - tau)| > 1/2 and tau the asymptotic phase of J_{n - 1/2}.
// Intervals are enumerated exactly up to `cutoff`; past it the set has
// density 2/3 and the remainder is added in closed form. R may be +inf.
double br_endpoint_integral(int n, double p, double r1, double R,
                            double cutoff = 1e6);

}  // namespace wnlab::ops
