#pragma once

// Fenchel-Nielsen charts: surface type, pants decomposition combinatorics,
// coordinates, and the curve classes the rest of the library speaks in.
// Supported types are the low-complexity surfaces with 3g-3+n <= 3:
// (1,1), (0,4), (1,2), (2,0).

#include <optional>
#include <string>
#include <vector>

#include "teichflow/words.hpp"

namespace teich {

struct SurfaceType {
  int genus = 0;
  int punctures = 0;

  bool operator==(const SurfaceType&) const = default;
};

inline int chart_dim(SurfaceType s) { return 3 * s.genus - 3 + s.punctures; }

// One boundary slot of a pants piece: either glued along an internal
// pants curve or left as a cusp.
struct PantsSlot {
  enum Kind { CURVE, PUNCTURE } kind = CURVE;
  int index = 0;
};

struct PantsPiece {
  PantsSlot slot[3];
};

// A curve class: either one of the pants curves of the decomposition
// (indexed, lengths are coordinates) or a transverse class named by the
// canonical form of its free-homotopy word.
struct CurveClass {
  enum Kind { PANTS, WORD } kind = PANTS;
  int index = 0;   // pants curve index when kind == PANTS
  Word word;       // canonical form when kind == WORD

  bool operator==(const CurveClass&) const = default;
  bool operator<(const CurveClass& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == PANTS) return index < o.index;
    return word < o.word;
  }
};

std::string curve_label(const CurveClass& c);

struct Chart {
  SurfaceType type;
  int dim = 0;                       // number of pants curves
  int rank = 0;                      // pi_1 generator count
  std::vector<PantsPiece> pieces;    // 2g-2+n pieces, slots validated

  // Holonomy words over the chart's marked generators.
  std::vector<Word> curve_words;       // pants curve i -> word
  std::vector<Word> peripheral_words;  // one per puncture class, canonical
  std::optional<Word> relator;         // surface relation (closed genus 2)

  // Canonical forms excluded from transverse enumeration (the pants
  // curves and peripherals themselves).
  std::set<Word> excluded_canonicals;
};

// Build the standard chart for a supported surface type; validates the
// gluing combinatorics (each curve on exactly two slots, punctures on one,
// piece count 2g-2+n) and throws SchemaError for unsupported types.
Chart make_chart(SurfaceType type);

struct FNPoint {
  std::vector<double> l;      // pants curve lengths, positive
  std::vector<double> theta;  // twists, same dimension

  bool operator==(const FNPoint&) const = default;
};

// Numeric-range guard for coordinates: beyond this, e^{l/2} powers in
// word products overflow enumeration in double.
inline constexpr double kMaxLength = 32.0;

// Throws SchemaError on dimension mismatch or non-finite/non-positive
// coordinates.
void validate_point(const Chart& chart, const FNPoint& x);

} // namespace teich
