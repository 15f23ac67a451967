#pragma once

// Scalar blending pieces for the gradient field: the C^2 quintic
// smoothstep, the length ramp used for BLENDED targets, and the global
// cutoff phi that switches the field off as the systole leaves the thin
// part. All three share the same profile so the field has a single
// transition scale [2*eps, 3*eps].

namespace teich {

// 6u^5 - 15u^4 + 10u^3 on [0,1], clamped outside; C^2 at both ends,
// value 1/2 at u = 1/2.
double smoothstep_quintic(double u);

// 1 for v <= 2*eps, 0 for v >= 3*eps, smoothstep in between.
double cutoff_phi(double v, double eps);

// BLENDED per-curve target rate r(l) = cutoff_phi(l, eps): curves at or
// below 2*eps push at full rate, curves past 3*eps are released.
double blend_ramp(double l, double eps);

} // namespace teich
