#include "doctest.h"

#include <cmath>

#include "teichflow/dd.hpp"
#include "teichflow/rng.hpp"

using teich::dd;
using teich::Mat2dd;

TEST_SUITE("dd") {

TEST_CASE("components stay normalized: lo below the rounding level of hi") {
  teich::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    dd a = dd(rng.uniform(-10.0, 10.0)) / dd(rng.uniform(0.5, 10.0));
    if (a.hi == 0.0) continue;
    CHECK(std::abs(a.lo) <= std::ldexp(std::abs(a.hi), -52));
    CHECK(a.hi + a.lo == a.hi);
  }
}

TEST_CASE("field identities hold far beyond double precision") {
  teich::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    dd a = dd(rng.uniform(-4.0, 4.0)) + dd(rng.uniform(-1.0, 1.0) * 1e-20);
    dd b = dd(rng.uniform(0.25, 4.0)) + dd(rng.uniform(-1.0, 1.0) * 1e-20);

    dd sum_round_trip = (a + b) - b - a;
    CHECK(std::abs(sum_round_trip.to_double()) <= 1e-30);

    dd prod_round_trip = (a * b) / b - a;
    CHECK(std::abs(prod_round_trip.to_double()) <= 1e-29 * (1.0 + std::abs(a.hi)));
  }
}

TEST_CASE("division carries the correct low-order tail") {
  // 1/3 is the canonical example: the double part alone is off by ~1.85e-17.
  dd third = dd(1.0) / dd(3.0);
  CHECK(third.hi == doctest::Approx(0.33333333333333331).epsilon(1e-16));
  CHECK(third.lo == doctest::Approx(1.8503717077085942e-17).epsilon(1e-12));
  dd back = third * dd(3.0) - dd(1.0);
  CHECK(std::abs(back.to_double()) <= 1e-31);
}

TEST_CASE("sqrt squares back to its argument") {
  teich::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    dd x = dd(rng.log_uniform(1e-8, 1e8));
    dd r = teich::sqrt(x);
    dd resid = r * r - x;
    CHECK(std::abs(resid.to_double()) <= 1e-30 * x.hi);
  }
  CHECK(teich::sqrt(dd(0.0)).hi == 0.0);
}

TEST_CASE("products keep the defect a plain double drops") {
  // 0.1 * 0.1 in double is not the double nearest 0.01; dd keeps the error.
  dd p = dd(0.1) * dd(0.1);
  CHECK(p.hi == 0.1 * 0.1);
  CHECK(p.lo != 0.0);
  CHECK(std::abs((p - dd(0.01)).to_double()) <= 1e-18);  // 0.01 itself is inexact
}

TEST_CASE("matrix inverse is exact to dd precision on shear products") {
  teich::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Mat2dd u{dd(1.0), dd(rng.uniform(-3.0, 3.0)), dd(0.0), dd(1.0)};
    Mat2dd l{dd(1.0), dd(0.0), dd(rng.uniform(-3.0, 3.0)), dd(1.0)};
    Mat2dd prod = u * l * u;
    Mat2dd ident = prod * prod.inverse();
    CHECK(std::abs((ident.a - dd(1.0)).to_double()) <= 1e-28);
    CHECK(std::abs((ident.d - dd(1.0)).to_double()) <= 1e-28);
    CHECK(std::abs(ident.b.to_double()) <= 1e-28);
    CHECK(std::abs(ident.c.to_double()) <= 1e-28);
    CHECK(std::abs((prod.det() - dd(1.0)).to_double()) <= 1e-28);
  }
}

TEST_CASE("distance to signed identity distinguishes the two signs") {
  Mat2dd id = Mat2dd::identity();
  CHECK(teich::dist_to_signed_identity(id, +1.0) == 0.0);
  CHECK(teich::dist_to_signed_identity(id, -1.0) == doctest::Approx(2.0));
  CHECK(teich::dist_to_signed_identity(-id, -1.0) == 0.0);
}

TEST_CASE("comparison and abs resolve ties through the low word") {
  dd a = dd(1.0) + dd(1e-20);
  dd b = dd(1.0);
  CHECK(b < a);
  CHECK(a > b);
  CHECK(teich::abs(dd(-2.5)).hi == 2.5);
  CHECK(teich::abs(dd(0.0, -1e-20)).lo == 1e-20);
}

}  // TEST_SUITE("dd")
