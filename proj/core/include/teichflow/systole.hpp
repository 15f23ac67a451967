#pragma once

// Systole, short sets, truncation predicate, and Bers-type boxes.
//
// Fast path: every closed geodesic other than a pants curve either
// crosses some pants curve -- collar lemma: length >= 2 asinh(1/sinh(l/2))
// for the curve it crosses -- or stays inside one pants piece, where it
// must self-intersect and hence has length >= 2 acosh(3). When the
// minimum pants coordinate sits below both floors the systole is that
// coordinate and no word enumeration is needed; this covers the entire
// thin part the flow operates in.

#include <vector>

#include "teichflow/fn_chart.hpp"
#include "teichflow/holonomy.hpp"

namespace teich {

// Geodesics within one pants piece self-intersect: length >= 2 acosh(3).
double pants_interior_floor();

// Collar bound: a closed geodesic crossing a pants curve of length l is
// at least this long.
double crossing_floor(double l);

// Lower bound for every non-pants-curve geodesic at the given coordinates.
double transverse_floor(const FNPoint& x);

// Comparisons within this tolerance count as ties (realizers, argmin).
inline constexpr double kTieTol = 1e-9;

struct SystoleResult {
  double lambda = 0.0;
  std::vector<CurveClass> realizers;   // all classes within kTieTol of lambda
  bool certified = false;              // true: collar certificate, no enumeration
};

// Systole over a chart point. Builds holonomy and enumerates only when
// the certificate does not apply (thick points).
SystoleResult systole(const Chart& chart, const FNPoint& x, int max_word_length);

// Classes of length <= threshold, certificate-aware.
ShortSet short_set(const Chart& chart, const FNPoint& x, double threshold, int max_word_length);

// Lambda(x) >= eps - 1e-12.
bool in_truncated(const Chart& chart, const FNPoint& x, double eps, int max_word_length);

// Per-coordinate box: l_min <= l_i <= l_max and |theta_i| <= theta_abs
// for every pants curve i.
struct BersBox {
  double l_min = 0.0;
  double l_max = 0.0;
  double theta_abs = 0.0;
};

bool in_bers_box(const FNPoint& x, const BersBox& box);

} // namespace teich
