#pragma once

// Double-double ("dd") arithmetic: an unevaluated sum hi + lo of two
// doubles, giving ~32 significant digits. Holonomy matrices are built and
// stored in dd because thin-part relator and trace checks route through
// conjugating frames with norms ~1/l^2; in plain double the cancellation
// noise reaches ~1e-7, far above the 1e-9 trace tolerances. Only +,-,*,/
// and sqrt are needed; transcendentals are seeded once in double and all
// derived algebra stays in dd (see holonomy.cpp).

#include <cmath>
#include <string>

namespace teich {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {

// Error-free transforms. two_sum/two_prod return the rounded result and
// the exact rounding error; two_prod relies on a correctly rounded fma.
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b| (or a == 0).
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  double err = b - (s - a);
  return {s, err};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

} // namespace detail

inline dd operator+(const dd& a, const dd& b) {
  dd s = detail::two_sum(a.hi, b.hi);
  dd t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a) { return {-a.hi, -a.lo}; }

inline dd operator-(const dd& a, const dd& b) { return a + (-b); }

inline dd operator*(const dd& a, const dd& b) {
  dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, const dd& b) {
  // Long division: three quotient terms then renormalize.
  double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  double q3 = r.hi / b.hi;
  dd s = detail::quick_two_sum(q1, q2);
  s.lo += q3;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline dd& operator+=(dd& a, const dd& b) { a = a + b; return a; }
inline dd& operator-=(dd& a, const dd& b) { a = a - b; return a; }
inline dd& operator*=(dd& a, const dd& b) { a = a * b; return a; }
inline dd& operator/=(dd& a, const dd& b) { a = a / b; return a; }

inline dd sqrt(const dd& a) {
  if (a.hi == 0.0 && a.lo == 0.0) return dd(0.0);
  // One Newton step on y ~ sqrt(a) in double is enough for dd accuracy:
  // y + (a - y^2) / (2y), with the residual formed in dd.
  double y = std::sqrt(a.hi);
  dd r = a - dd(y) * dd(y);
  return dd(y) + dd(r.to_double() / (2.0 * y));
}

inline dd abs(const dd& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline bool operator<(const dd& a, const dd& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const dd& a, const dd& b) { return b < a; }

// 2x2 real matrix in plain double: the bulk-enumeration workhorse.
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Mat2 identity() { return {}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse_det1() const {
    // Valid for det = 1 (all holonomy matrices here).
    return {d, -b, -c, a};
  }
  double trace() const { return a + d; }
};

// 2x2 matrix in dd: construction, storage, and invariant checks.
struct Mat2dd {
  dd a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mat2dd identity() { return {}; }

  Mat2dd operator*(const Mat2dd& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2dd operator-() const { return {-a, -b, -c, -d}; }

  Mat2dd inverse() const {
    dd det = a * d - b * c;
    return {d / det, -b / det, -c / det, a / det};
  }
  dd trace() const { return a + d; }
  dd det() const { return a * d - b * c; }

  Mat2 to_double() const {
    return {a.to_double(), b.to_double(), c.to_double(), d.to_double()};
  }
};

inline Mat2dd transpose(const Mat2dd& m) { return {m.a, m.c, m.b, m.d}; }

// Max-abs entry of m - s*I for sign s in {+1,-1}; used for relator checks.
inline double dist_to_signed_identity(const Mat2dd& m, double s) {
  double r = std::abs((m.a - dd(s)).to_double());
  r = std::max(r, std::abs(m.b.to_double()));
  r = std::max(r, std::abs(m.c.to_double()));
  r = std::max(r, std::abs((m.d - dd(s)).to_double()));
  return r;
}

} // namespace teich
