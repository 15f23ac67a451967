#include "teichflow/blending.hpp"

namespace teich {

double smoothstep_quintic(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
}

double cutoff_phi(double v, double eps) {
  return smoothstep_quintic((3.0 * eps - v) / eps);
}

double blend_ramp(double l, double eps) { return cutoff_phi(l, eps); }

} // namespace teich
