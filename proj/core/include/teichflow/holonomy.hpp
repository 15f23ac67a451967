#pragma once

// Holonomy representations pi_1 -> SL(2,R) in Fenchel-Nielsen coordinates
// for the four supported surface types, plus trace-based curve lengths and
// short-geodesic enumeration.
//
// Matrices are constructed AND stored in double-double. Transcendentals
// (e^{l/2}) are evaluated once in plain double and treated as exact seeds;
// every derived quantity is dd-algebra over those seeds, so group
// relations hold to ~1e-30 and thin-part trace checks pass with ~1e-9
// tolerances that plain double cannot reach (conjugating frames carry
// ~1/l^2 norms through the relator).

#include <optional>
#include <utility>
#include <vector>

#include "teichflow/dd.hpp"
#include "teichflow/fn_chart.hpp"
#include "teichflow/words.hpp"

namespace teich {

struct Holonomy {
  const Chart* chart = nullptr;   // not owned; outlives the holonomy
  FNPoint x;

  std::vector<Mat2dd> gen, gen_inv;     // construction precision
  std::vector<Mat2> gen_d, gen_inv_d;   // rounded views for enumeration

  Mat2dd eval(const Word& w) const;
  Mat2 eval_d(const Word& w) const;
};

// Build and verify: generator determinants, pants-curve traces
// (|tr| = 2 cosh(l_i/2)), peripheral traces (|tr| = 2), and for closed
// genus 2 the surface relation itself, all within 1e-9 in dd (observed
// ~1e-25). Throws NumericalError on violation.
Holonomy build_holonomy(const Chart& chart, const FNPoint& x);

// Geodesic length from |trace|, stable near |trace| = 2.
double length_from_abs_trace(const dd& abs_tr);

// Pants-curve classes read the coordinate directly; transverse words go
// through the matrices. curve_length_via_matrices forces the matrix path
// for any class (used to cross-check the coordinate shortcut).
double curve_length(const Holonomy& h, const CurveClass& c);
double curve_length_via_matrices(const Holonomy& h, const CurveClass& c);

struct ShortEntry {
  CurveClass cls;
  double length = 0.0;
};

struct ShortSet {
  double threshold = 0.0;
  int max_word_length = 0;
  bool enumerated = false;   // false when the collar certificate skipped the word search
  std::vector<ShortEntry> entries;                 // sorted by length
  std::vector<std::pair<Word, double>> degenerate; // |tr| <= 2 + 1e-12: logged, excluded
};

// All primitive closed-geodesic classes with length <= length_bound and
// word length <= max_word_length (pants curves always included via their
// coordinates). When convergence_check is set, the enumeration is re-run
// at half depth and must produce the same class set, otherwise the result
// has not stabilized and a NumericalError is thrown.
ShortSet enumerate_short_geodesics(const Holonomy& h, double length_bound,
                                   int max_word_length, bool convergence_check = true);

} // namespace teich
