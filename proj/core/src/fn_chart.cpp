#include "teichflow/fn_chart.hpp"

#include <cmath>

#include "teichflow/errors.hpp"

namespace teich {

std::string curve_label(const CurveClass& c) {
  if (c.kind == CurveClass::PANTS) return "curve" + std::to_string(c.index);
  return word_label(c.word);
}

namespace {

Word W(std::initializer_list<int> letters) {
  Word w;
  for (int c : letters) w.push_back(Letter(c));
  return w;
}

void validate_gluing(const Chart& c) {
  int expect_pieces = 2 * c.type.genus - 2 + c.type.punctures;
  if (int(c.pieces.size()) != expect_pieces) {
    throw SchemaError("chart has " + std::to_string(c.pieces.size()) +
                      " pants pieces, expected " + std::to_string(expect_pieces));
  }
  std::vector<int> curve_uses(c.dim, 0);
  std::vector<int> punct_uses(c.type.punctures, 0);
  for (const auto& piece : c.pieces) {
    for (const auto& s : piece.slot) {
      if (s.kind == PantsSlot::CURVE) {
        if (s.index < 0 || s.index >= c.dim) throw SchemaError("slot references unknown pants curve");
        ++curve_uses[s.index];
      } else {
        if (s.index < 0 || s.index >= c.type.punctures) throw SchemaError("slot references unknown puncture");
        ++punct_uses[s.index];
      }
    }
  }
  for (int u : curve_uses)
    if (u != 2) throw SchemaError("each pants curve must bound exactly two slots");
  for (int u : punct_uses)
    if (u != 1) throw SchemaError("each puncture must sit on exactly one slot");
}

} // namespace

Chart make_chart(SurfaceType type) {
  if (2 * type.genus + type.punctures <= 2) {
    throw SchemaError("surface type (" + std::to_string(type.genus) + "," +
                      std::to_string(type.punctures) + ") is not hyperbolic");
  }
  Chart c;
  c.type = type;
  c.dim = chart_dim(type);

  auto curve = [](int i) { return PantsSlot{PantsSlot::CURVE, i}; };
  auto punct = [](int i) { return PantsSlot{PantsSlot::PUNCTURE, i}; };

  if (type == SurfaceType{1, 1}) {
    // pi_1 = <a, b>; pants curve a, cusp word [a,b].
    c.rank = 2;
    c.pieces = {{curve(0), curve(0), punct(0)}};
    c.curve_words = {W({0})};
    c.peripheral_words = {canonical_form(W({0, 2, 1, 3}))};
  } else if (type == SurfaceType{0, 4}) {
    // pi_1 = <c1, c2, c3>, fourth cusp word (c1 c2 c3)^-1; pants curve c1 c2.
    c.rank = 3;
    c.pieces = {{punct(0), punct(1), curve(0)}, {curve(0), punct(2), punct(3)}};
    c.curve_words = {W({0, 2})};
    c.peripheral_words = {W({0}), W({2}), W({4}), canonical_form(W({0, 2, 4}))};
  } else if (type == SurfaceType{1, 2}) {
    // pi_1 = <x, y, t>: one-holed torus <x, y-conjugacy> glued to a
    // cusp-cusp pants along curves x (index 0) and y (index 1) with
    // transporter t. Cusp words (x y)^-1 and (x t^-1 y t)^-1.
    c.rank = 3;
    c.pieces = {{curve(0), curve(1), punct(0)}, {curve(1), curve(0), punct(1)}};
    c.curve_words = {W({0}), W({2})};
    c.peripheral_words = {canonical_form(word_inverse(W({0, 2}))),
                          canonical_form(word_inverse(W({0, 5, 2, 4})))};
  } else if (type == SurfaceType{2, 0}) {
    // pi_1 = <a1, b1, a2, b2 | [a1,b1][a2,b2]>; pants curves a1, [a1,b1], a2.
    c.rank = 4;
    c.pieces = {{curve(0), curve(0), curve(1)}, {curve(1), curve(2), curve(2)}};
    c.curve_words = {W({0}), W({0, 2, 1, 3}), W({4})};
    c.relator = W({0, 2, 1, 3, 4, 6, 5, 7});
  } else {
    throw SchemaError("unsupported surface type (" + std::to_string(type.genus) + "," +
                      std::to_string(type.punctures) + "); supported: (1,1), (0,4), (1,2), (2,0)");
  }

  for (const Word& w : c.curve_words) c.excluded_canonicals.insert(canonical_form(w));
  for (const Word& w : c.peripheral_words) c.excluded_canonicals.insert(canonical_form(w));
  validate_gluing(c);
  return c;
}

void validate_point(const Chart& chart, const FNPoint& x) {
  if (int(x.l.size()) != chart.dim || int(x.theta.size()) != chart.dim) {
    throw SchemaError("point dimension mismatch: chart has " + std::to_string(chart.dim) +
                      " pants curves, got " + std::to_string(x.l.size()) + " lengths and " +
                      std::to_string(x.theta.size()) + " twists");
  }
  for (int i = 0; i < chart.dim; ++i) {
    if (!std::isfinite(x.l[i]) || !std::isfinite(x.theta[i])) {
      throw SchemaError("non-finite coordinate at pants curve " + std::to_string(i));
    }
    if (!(x.l[i] > 0.0)) {
      throw SchemaError("pants curve " + std::to_string(i) + " has non-positive length");
    }
    if (x.l[i] > kMaxLength) {
      throw SchemaError("pants curve " + std::to_string(i) + " length exceeds chart range");
    }
  }
}

} // namespace teich
