#include "teichflow/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "teichflow/errors.hpp"

namespace teich {

namespace {

// diag(e^{t/2}, e^{-t/2}) with the lower entry the exact dd reciprocal of
// the seed, so det = 1 to dd precision.
Mat2dd translation(double t) {
  dd lam(std::exp(0.5 * t));
  return {lam, dd(0.0), dd(0.0), dd(1.0) / lam};
}

// Unique M (up to the residue sign choice `side`) with tr M = tv and
// tr(diag(lf,1/lf) * M) = tq.
Mat2dd second_gen(const dd& lf, const dd& tv, const dd& tq, double side) {
  dd p = (tq - tv / lf) / (lf - dd(1.0) / lf);
  dd s = tv - p;
  dd qr = p * s - dd(1.0);
  dd q = dd(side) * sqrt(abs(qr));
  dd r = qr / q;
  return {p, q, r, s};
}

// Frame R with R(0) = repelling, R(inf) = attracting fixed point of the
// hyperbolic element M; delta = sqrt(tr^2 - 4) passed analytically
// (= 2 sinh(l/2)) to keep everything on the common seeds.
Mat2dd axis_frame(const Mat2dd& M, const dd& delta) {
  dd t = M.trace();
  double sg = (t.hi >= 0.0) ? 1.0 : -1.0;
  Mat2dd R;
  if (std::abs(M.c.to_double()) > 1e-300) {
    dd x_att = ((M.a - M.d) + dd(sg) * delta) / (dd(2.0) * M.c);
    dd x_rep = ((M.a - M.d) - dd(sg) * delta) / (dd(2.0) * M.c);
    dd det = x_att - x_rep;
    dd nrm = sqrt(abs(det));
    R = {x_att / nrm, x_rep / nrm, dd(1.0) / nrm, dd(1.0) / nrm};
    if (det.hi < 0.0) {
      R.b = -R.b;
      R.d = -R.d;
    }
  } else {
    // Triangular case: fixed points inf and -b/(a-d).
    dd x0 = -M.b / (M.a - M.d);
    if (sg * (M.a - M.d).to_double() > 0.0) {
      R = {dd(1.0), x0, dd(0.0), dd(1.0)};   // attracting at inf
    } else {
      R = {x0, dd(-1.0), dd(1.0), dd(0.0)};  // attracting at x0: det of [x0,1;1,0] is -1
    }
  }
  return R;
}

struct Builder {
  std::vector<Mat2dd> gen;
};

// Once-punctured torus <a, b>: a = diag pants curve, tr b = tr ab at
// twist 0, cusp [a,b] with trace -2.
Builder build_1_1(const FNPoint& x) {
  dd lam(std::exp(0.5 * x.l[0]));
  Mat2dd A{lam, dd(0.0), dd(0.0), dd(1.0) / lam};
  dd tx = lam + dd(1.0) / lam;
  dd y = tx / sqrt(tx - dd(2.0));
  Mat2dd B0 = second_gen(lam, y, y, 1.0);
  Mat2dd B = translation(x.theta[0]) * B0;
  return {{A, B}};
}

// Four-punctured sphere <c1, c2, c3>, fourth cusp (c1 c2 c3)^-1, pants
// curve c1 c2 with holonomy -diag(e^{l/2}, e^{-l/2}).
Builder build_0_4(const FNPoint& x) {
  dd lam(std::exp(0.5 * x.l[0]));
  dd d = dd(2.0) / (lam - dd(1.0));
  dd a = dd(-2.0) - d;
  dd bc = a * d - dd(1.0);
  dd b = sqrt(-bc);
  dd cc = bc / b;
  Mat2dd C1{a, b, cc, d};
  Mat2dd H{lam, dd(0.0), dd(0.0), dd(1.0) / lam};
  Mat2dd C2 = C1.inverse() * (-H);
  auto jconj = [](const Mat2dd& m) { return Mat2dd{m.a, -m.b, -m.c, m.d}; };
  Mat2dd C3 = jconj(C2).inverse();
  Mat2dd E = translation(x.theta[0]);
  C3 = E * C3 * E.inverse();
  return {{C1, C2, C3}};
}

// Twice-punctured torus <x, y, t>: torus handle on pants curve 0 (= x),
// transporter t across pants curve 1 (= y).
Builder build_1_2(const FNPoint& p) {
  dd lam1(std::exp(0.5 * p.l[0]));
  dd lam2(std::exp(0.5 * p.l[1]));
  Mat2dd X{lam1, dd(0.0), dd(0.0), dd(1.0) / lam1};
  dd c2 = lam2 + dd(1.0) / lam2;
  Mat2dd Y = second_gen(lam1, c2, dd(-2.0), 1.0);
  Mat2dd V0 = second_gen(lam1, c2, dd(-2.0), -1.0);
  Mat2dd E1 = translation(p.theta[0]);
  Mat2dd V = E1 * V0 * E1.inverse();
  dd d2 = lam2 - dd(1.0) / lam2;
  Mat2dd RT = axis_frame(Y, d2);
  Mat2dd RV = axis_frame(V, d2);
  Mat2dd T = RT * translation(p.theta[1]) * RV.inverse();
  return {{X, Y, T}};
}

// One-holed torus <a, b> with [a, b] = -diag(e^{Lb/2}, e^{-Lb/2}) exactly,
// a the pants curve of length l, twisted by tau along it.
std::pair<Mat2dd, Mat2dd> torus_piece(double l, double tau, double Lb) {
  dd mu(std::exp(0.5 * Lb));
  dd laml(std::exp(0.5 * l));
  dd tA = -(laml + dd(1.0) / laml);
  dd ss = (-tA - tA / mu) / (mu - dd(1.0) / mu);
  dd pp = tA - ss;
  dd qr = pp * ss - dd(1.0);
  dd q = sqrt(abs(qr));
  dd r = qr / q;
  Mat2dd U{pp, q, r, ss};
  Mat2dd H{mu, dd(0.0), dd(0.0), dd(1.0) / mu};
  Mat2dd W = U.inverse() * (-H);
  dd d1 = laml - dd(1.0) / laml;
  Mat2dd RU = axis_frame(U.inverse(), d1);
  Mat2dd RW = axis_frame(W, d1);
  Mat2dd Bst = RU * translation(tau) * RW.inverse();
  return {U, Bst.inverse()};
}

// Closed genus 2 <a1, b1, a2, b2>: two one-holed tori glued along the
// separating curve [a1,b1] (pants curve 1), with a 90-degree flip so the
// two commutators compose to the identity.
Builder build_2_0(const FNPoint& x) {
  auto [A1, B1] = torus_piece(x.l[0], x.theta[0], x.l[1]);
  auto [A2, B2] = torus_piece(x.l[2], x.theta[2], x.l[1]);
  Mat2dd S{dd(0.0), dd(-1.0), dd(1.0), dd(0.0)};
  Mat2dd E = translation(x.theta[1]);
  Mat2dd C = E * S;
  Mat2dd Ci = C.inverse();
  A2 = C * A2 * Ci;
  B2 = C * B2 * Ci;
  return {{A1, B1, A2, B2}};
}

void check_invariants(const Holonomy& h) {
  const Chart& c = *h.chart;
  const double tol = 1e-9;
  for (size_t i = 0; i < h.gen.size(); ++i) {
    double dev = std::abs((h.gen[i].det() - dd(1.0)).to_double());
    if (dev > tol) {
      throw NumericalError("holonomy generator " + std::to_string(i) +
                           " determinant off identity by " + std::to_string(dev));
    }
  }
  for (int i = 0; i < c.dim; ++i) {
    dd lam(std::exp(0.5 * h.x.l[i]));
    dd target = lam + dd(1.0) / lam;
    dd tr = abs(h.eval(c.curve_words[i]).trace());
    double dev = std::abs((tr - target).to_double());
    if (dev > tol) {
      throw NumericalError("pants curve " + std::to_string(i) + " trace deviates from 2cosh(l/2) by " +
                           std::to_string(dev));
    }
  }
  for (const Word& w : c.peripheral_words) {
    dd tr = abs(h.eval(w).trace());
    double dev = std::abs((tr - dd(2.0)).to_double());
    if (dev > tol) {
      throw NumericalError("peripheral word " + word_label(w) + " trace deviates from 2 by " +
                           std::to_string(dev));
    }
  }
  if (c.relator) {
    Mat2dd R = h.eval(*c.relator);
    double dev = std::min(dist_to_signed_identity(R, 1.0), dist_to_signed_identity(R, -1.0));
    if (dev > tol) {
      throw NumericalError("surface relation deviates from identity by " + std::to_string(dev));
    }
  }
}

} // namespace

Mat2dd Holonomy::eval(const Word& w) const {
  Mat2dd M;
  for (Letter c : w) M = M * (c % 2 == 0 ? gen[c / 2] : gen_inv[c / 2]);
  return M;
}

Mat2 Holonomy::eval_d(const Word& w) const {
  Mat2 M;
  for (Letter c : w) M = M * (c % 2 == 0 ? gen_d[c / 2] : gen_inv_d[c / 2]);
  return M;
}

Holonomy build_holonomy(const Chart& chart, const FNPoint& x) {
  validate_point(chart, x);
  Holonomy h;
  h.chart = &chart;
  h.x = x;

  Builder b;
  if (chart.type == SurfaceType{1, 1}) {
    b = build_1_1(x);
  } else if (chart.type == SurfaceType{0, 4}) {
    b = build_0_4(x);
  } else if (chart.type == SurfaceType{1, 2}) {
    b = build_1_2(x);
  } else if (chart.type == SurfaceType{2, 0}) {
    b = build_2_0(x);
  } else {
    throw SchemaError("no holonomy construction for this surface type");
  }

  h.gen = std::move(b.gen);
  for (const Mat2dd& g : h.gen) h.gen_inv.push_back(g.inverse());
  for (const Mat2dd& g : h.gen) h.gen_d.push_back(g.to_double());
  for (const Mat2dd& g : h.gen_inv) h.gen_inv_d.push_back(g.to_double());

  check_invariants(h);
  return h;
}

double length_from_abs_trace(const dd& abs_tr) {
  dd u = abs_tr / dd(2.0);
  dd e = u * u - dd(1.0);
  if (e.hi <= 0.0) return 0.0;
  dd s = sqrt(e);
  // 2 log(u + sqrt(u^2-1)) via log1p for stability near u = 1.
  return 2.0 * std::log1p((u - dd(1.0) + s).to_double());
}

double curve_length(const Holonomy& h, const CurveClass& c) {
  if (c.kind == CurveClass::PANTS) {
    if (c.index < 0 || c.index >= h.chart->dim) throw SchemaError("pants curve index out of range");
    return h.x.l[c.index];
  }
  return curve_length_via_matrices(h, c);
}

double curve_length_via_matrices(const Holonomy& h, const CurveClass& c) {
  const Word& w = (c.kind == CurveClass::PANTS) ? h.chart->curve_words[c.index] : c.word;
  dd tr = abs(h.eval(w).trace());
  if (!(tr.to_double() > 2.0)) {
    throw NumericalError("curve class " + curve_label(c) + " is not hyperbolic (|tr| = " +
                         std::to_string(tr.to_double()) + ")");
  }
  return length_from_abs_trace(tr);
}

namespace {

struct EnumResult {
  std::vector<ShortEntry> words;                    // transverse classes only
  std::vector<std::pair<Word, double>> degenerate;
};

EnumResult enumerate_words(const Holonomy& h, double length_bound, int max_word_length) {
  const Chart& chart = *h.chart;
  const int nletters = 2 * chart.rank;
  const double tr_bound = 2.0 * std::cosh(0.5 * length_bound) + 1e-9;

  std::optional<DehnFilter> dehn;
  if (chart.relator) dehn.emplace(*chart.relator);

  std::vector<Word> candidates;
  Word w;
  std::vector<Mat2> prod(size_t(max_word_length) + 1);
  prod[0] = Mat2::identity();

  // DFS over free-reduced words with incremental products; a node is a
  // candidate when also cyclically reduced and its |trace| clears the cut.
  auto rec = [&](auto&& self) -> void {
    const int k = int(w.size());
    if (k > 0 && (k < 2 || inverse_letter(w.front()) != w.back())) {
      double t = std::abs(prod[k].trace());
      if (t <= tr_bound) candidates.push_back(w);
    }
    if (k == max_word_length) return;
    for (Letter c = 0; c < Letter(nletters); ++c) {
      if (k > 0 && inverse_letter(w.back()) == c) continue;
      prod[k + 1] = prod[k] * (c % 2 == 0 ? h.gen_d[c / 2] : h.gen_inv_d[c / 2]);
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);

  EnumResult out;
  std::map<Word, double> seen;
  for (const Word& cand : candidates) {
    if (dehn && dehn->drop(cand)) continue;
    Word cw = canonical_form(cand);
    if (seen.count(cw) || chart.excluded_canonicals.count(cw)) continue;
    if (!is_primitive(cw)) continue;
    dd tr = abs(h.eval(cw).trace());
    if (tr.to_double() <= 2.0 + 1e-12) {
      seen[cw] = 0.0;
      out.degenerate.emplace_back(cw, tr.to_double());
      continue;
    }
    double len = length_from_abs_trace(tr);
    seen[cw] = len;
    if (len <= length_bound + 1e-12) {
      out.words.push_back({CurveClass{CurveClass::WORD, 0, cw}, len});
    }
  }
  return out;
}

} // namespace

ShortSet enumerate_short_geodesics(const Holonomy& h, double length_bound,
                                   int max_word_length, bool convergence_check) {
  if (max_word_length < 1) throw SchemaError("max_word_length must be >= 1");
  if (!(length_bound > 0.0)) throw SchemaError("length bound must be positive");

  ShortSet out;
  out.threshold = length_bound;
  out.max_word_length = max_word_length;
  out.enumerated = true;

  EnumResult full = enumerate_words(h, length_bound, max_word_length);
  out.entries = full.words;
  out.degenerate = std::move(full.degenerate);

  if (convergence_check && max_word_length >= 2) {
    const int half = (max_word_length + 1) / 2;
    EnumResult halfrun = enumerate_words(h, length_bound, half);
    auto key = [](const std::vector<ShortEntry>& v) {
      std::vector<Word> k;
      for (const auto& e : v) k.push_back(e.cls.word);
      std::sort(k.begin(), k.end());
      return k;
    };
    if (key(halfrun.words) != key(full.words)) {
      throw NumericalError("short-geodesic enumeration did not stabilize between word length " +
                           std::to_string(half) + " and " + std::to_string(max_word_length) +
                           "; raise max_word_length");
    }
  }

  for (int i = 0; i < h.chart->dim; ++i) {
    if (h.x.l[i] <= length_bound + 1e-12) {
      out.entries.push_back({CurveClass{CurveClass::PANTS, i, {}}, h.x.l[i]});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const ShortEntry& a, const ShortEntry& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.cls < b.cls;
  });
  return out;
}

} // namespace teich
