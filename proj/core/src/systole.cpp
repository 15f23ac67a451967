#include "teichflow/systole.hpp"

#include <algorithm>
#include <cmath>

#include "teichflow/errors.hpp"

namespace teich {

double pants_interior_floor() { return 2.0 * std::acosh(3.0); }

double crossing_floor(double l) { return 2.0 * std::asinh(1.0 / std::sinh(0.5 * l)); }

double transverse_floor(const FNPoint& x) {
  double lmax = *std::max_element(x.l.begin(), x.l.end());
  return std::min(crossing_floor(lmax), pants_interior_floor());
}

SystoleResult systole(const Chart& chart, const FNPoint& x, int max_word_length) {
  validate_point(chart, x);
  SystoleResult out;
  double mp = *std::min_element(x.l.begin(), x.l.end());
  if (mp <= transverse_floor(x) - kTieTol) {
    out.lambda = mp;
    out.certified = true;
    for (int i = 0; i < chart.dim; ++i) {
      if (x.l[i] <= mp + kTieTol) out.realizers.push_back({CurveClass::PANTS, i, {}});
    }
    return out;
  }
  Holonomy h = build_holonomy(chart, x);
  ShortSet ss = enumerate_short_geodesics(h, mp + kTieTol, max_word_length);
  out.lambda = mp;
  for (const ShortEntry& e : ss.entries) out.lambda = std::min(out.lambda, e.length);
  for (const ShortEntry& e : ss.entries) {
    if (e.length <= out.lambda + kTieTol) out.realizers.push_back(e.cls);
  }
  return out;
}

ShortSet short_set(const Chart& chart, const FNPoint& x, double threshold, int max_word_length) {
  validate_point(chart, x);
  if (threshold <= transverse_floor(x) - kTieTol) {
    ShortSet out;
    out.threshold = threshold;
    out.max_word_length = max_word_length;
    out.enumerated = false;
    for (int i = 0; i < chart.dim; ++i) {
      if (x.l[i] <= threshold + 1e-12) {
        out.entries.push_back({CurveClass{CurveClass::PANTS, i, {}}, x.l[i]});
      }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const ShortEntry& a, const ShortEntry& b) {
                if (a.length != b.length) return a.length < b.length;
                return a.cls < b.cls;
              });
    return out;
  }
  Holonomy h = build_holonomy(chart, x);
  return enumerate_short_geodesics(h, threshold, max_word_length);
}

bool in_truncated(const Chart& chart, const FNPoint& x, double eps, int max_word_length) {
  return systole(chart, x, max_word_length).lambda >= eps - 1e-12;
}

bool in_bers_box(const FNPoint& x, const BersBox& box) {
  for (size_t i = 0; i < x.l.size(); ++i) {
    if (x.l[i] < box.l_min || x.l[i] > box.l_max) return false;
    if (std::abs(x.theta[i]) > box.theta_abs) return false;
  }
  return true;
}

} // namespace teich
