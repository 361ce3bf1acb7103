#include <doctest.h>

#include <random>

#include "fk/lpoly.hpp"
#include "oracles.hpp"

using namespace fk;

namespace {

oracle::Poly to_oracle(const LPoly& p) {
  oracle::Poly o;
  p.for_each([&](long e, const BigInt& c) {
    Rational x(e, p.grid());
    x.canonicalize();
    o[x] = c;
  });
  return o;
}

LPoly random_poly(std::mt19937_64& g) {
  std::uniform_int_distribution<long> e(-15, 15), c(-30, 30), n(0, 7), gi(0, 2);
  int grids[] = {1, 2, 4};
  std::map<long, BigInt> t;
  for (long i = n(g); i > 0; --i) t[e(g)] += c(g);
  return LPoly::from_terms(grids[gi(g)], t);
}

}  // namespace

TEST_CASE("lpoly: construction normalizes the grid") {
  LPoly a = LPoly::monomial(3, 2, 4);  // 3 q^(1/2)
  CHECK(a.grid() == 2);
  CHECK(a.min_exponent() == Rational(1, 2));
  LPoly b = LPoly::monomial(1, 4, 4);
  CHECK(b.grid() == 1);
  CHECK(b == LPoly::monomial(1, Rational(1)));
  CHECK(LPoly::from_terms(4, {{1, 0}, {3, 0}}).is_zero());
  CHECK((a - a).grid() == 1);
}

TEST_CASE("lpoly: arithmetic agrees with the naive oracle") {
  std::mt19937_64 g(17);
  for (int i = 0; i < 300; ++i) {
    LPoly a = random_poly(g), b = random_poly(g);
    CHECK(to_oracle(a * b) == oracle::mul(to_oracle(a), to_oracle(b)));
    CHECK(to_oracle(a + b) == oracle::add(to_oracle(a), to_oracle(b)));
    CHECK(to_oracle(a - b) == oracle::add(to_oracle(a), to_oracle(b), -1));
  }
}

TEST_CASE("lpoly: lp_arith dispatches") {
  LPoly a = LPoly::monomial(2, 1) + 1, b = LPoly::monomial(1, -1);
  CHECK(lp_arith(a, b, ArithKind::add) == a + b);
  CHECK(lp_arith(a, b, ArithKind::sub) == a - b);
  CHECK(lp_arith(a, b, ArithKind::mul) == a * b);
  CHECK(lp_arith(a, LPoly(3), ArithKind::scale) == a * BigInt(3));
}

TEST_CASE("lpoly: exact division") {
  LPoly qm1 = LPoly::monomial(1, 1) - 1;
  LPoly qp1 = LPoly::monomial(1, 1) + 1;
  CHECK(div_exact(qm1 * qp1, qp1) == qm1);
  CHECK_THROWS_AS(div_exact(qp1, qm1), Error);
  try {
    div_exact(qp1, qm1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  CHECK_THROWS_AS(div_exact(qp1, LPoly()), Error);
  LPoly half = LPoly::monomial(1, 1, 2) + LPoly::monomial(-1, -1, 2);  // q^(1/2) - q^(-1/2)
  LPoly x = half * half * qp1;
  CHECK(lp_div_exact(x, half) == half * qp1);
  // big coefficients
  BigInt big("123456789012345678901234567890");
  LPoly bp = LPoly::monomial(big, 3) + LPoly::monomial(-big, -2);
  CHECK(div_exact(bp * qm1 * qm1, qm1) == bp * qm1);
}

TEST_CASE("lpoly: involutions, substitutions and evaluation") {
  LPoly p = LPoly::monomial(2, -3) + LPoly::monomial(5, 1, 4) + 7;
  CHECK(invert_q(invert_q(p)) == p);
  CHECK(lp_invert_q(p).coeff(Rational(3)) == 2);
  CHECK(p.shifted(Rational(1, 4)).coeff(Rational(1, 2)) == 5);
  CHECK(p.power_substituted(4).coeff(Rational(1)) == 5);
  CHECK(p.eval_at_one() == 14);
  CHECK(p.sign_pattern() == 1);
  CHECK((-p).sign_pattern() == -1);
  CHECK((p - 100).sign_pattern() == 0);
  CHECK(LPoly().sign_pattern() == 0);
  CHECK((LPoly::monomial(1, 2) + LPoly::monomial(1, -2) + 3).is_palindromic());
  CHECK_FALSE(p.is_palindromic());
}

TEST_CASE("lpoly: printing") {
  CHECK(LPoly::monomial(2, 6).to_string() == "2q⁶");
  CHECK((LPoly::monomial(1, -1) + 3 + LPoly::monomial(1, 1)).to_string() == "q⁻¹ + 3 + q");
  CHECK((LPoly::monomial(-1, 0) + LPoly::monomial(1, 13)).to_string() == "-1 + q¹³");
  CHECK(LPoly::monomial(1, 13, 2).to_string("x") == "x¹³ᐟ²");
  CHECK(LPoly().to_string() == "0");
  CHECK(superscript(Rational(-7, 4)) == "⁻⁷ᐟ⁴");
}

TEST_CASE("lpoly: rational strings round-trip") {
  for (auto s : {"0", "-3", "11891/12", "-630551/360", "2864712407/360"})
    CHECK(rational_to_string(rational_from_string(s)) == s);
  CHECK(rational_from_string("4/6") == Rational(2, 3));
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("abc"));
}
