#include <doctest.h>

#include "fk/cabling.hpp"
#include "fk/surgery.hpp"
#include "reference_data.hpp"

using namespace fk;

TEST_CASE("surgery: slope parsing") {
  SurgerySlope s = parse_slope("-1/2", 0);
  CHECK(s.p == 1);
  CHECK(s.r == 2);
  CHECK(parse_slope("-3", 1).r == 1);
  CHECK(parse_slope("-3", 1).b == 1);
  CHECK_THROWS_AS(parse_slope("1/2"), Error);
  CHECK_THROWS_AS(parse_slope("-1/0"), Error);
  CHECK_THROWS_AS(parse_slope("x"), Error);
}

TEST_CASE("surgery: single monomials and the selection rule") {
  // F = 1/2 (x^{1/2} - x^{-1/2}) with f_1 = 1; slope -1/1, p = 1: all four u survive
  FkSeries f;
  f.m_max = 41;  // f_3 .. f_41 known to vanish
  f.set(1, LPoly(1));
  QSeries q = laplace_zhat(f, {1, 1, 0}, 0);
  // u = ±1/2 ± 1/2: exponents u^2 = 1 (coefficient ±1/2 twice) and 0 (twice)
  CHECK(q.raw_min == 0);
  CHECK(q.delta_b == Rational(-1, 2));

  // p = 2, r = 1: u r = u and only even integers survive for b = 0
  QSeries q2 = laplace_zhat(f, {2, 1, 0}, 0);
  QSeries q3 = laplace_zhat(f, {2, 1, 1}, 0);
  CHECK(q2.raw_min == 0);
  CHECK(q3.raw_min == Rational(1, 2));
}

TEST_CASE("surgery: guaranteed truncation") {
  FkSeries f = gen_cable(2, 5, 31);
  CHECK_THROWS_AS(laplace_zhat(f, {1, 2, 0}, 5000), Error);
  try {
    laplace_zhat(f, {1, 2, 0}, 5000);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationInsufficient);
  }
  // nothing below the bound at all
  CHECK_THROWS_AS(laplace_zhat(gen_cable(3, 4, 21), {1, 1, 0}, 10), Error);
  CHECK(guaranteed_exponent({1, 2, 0}, 31) < guaranteed_exponent({1, 2, 0}, 41));
}

TEST_CASE("surgery: printed series [six surgeries]") {
  HTable table;
  for (const auto& fx : ref::surgery_fixtures()) {
    long last = fx.coeffs.back().first;
    QSeries q;
    for (long m = 21;; m += 10) {
      try {
        q = laplace_zhat(gen_cable(fx.p, fx.w, m, table), {fx.slope_p, fx.slope_r, 0}, last);
        break;
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::TruncationInsufficient);
        REQUIRE(m < 1000);
      }
    }
    CAPTURE(fx.label);
    CHECK(q.delta_b == fx.delta);
    CHECK(q.c == 0);
    CHECK(q.content == 2);
    CHECK(q.coeffs.begin()->second < 0);
    BigInt g = 0;
    for (auto [o, c] : fx.coeffs) g = gcd(g, BigInt(c));
    auto prim = q.primitive();
    for (long off = 0; off <= last; ++off) {
      long want = 0;
      for (auto [o, c] : fx.coeffs)
        if (o == off) want = c;
      BigInt got = prim.count(off) ? prim[off] : BigInt(0);
      CAPTURE(off);
      CHECK(got == BigInt(want) / g);
    }
  }
}

TEST_CASE("surgery: text form") {
  QSeries q = laplace_zhat(gen_cable(2, 5, 31), {1, 2, 0}, 60);
  CHECK(q.to_string(4).rfind("q^(167/2)(-2 + 2q¹³ - 4q⁵⁹", 0) == 0);
}
