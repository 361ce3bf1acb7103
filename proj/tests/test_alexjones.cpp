#include <doctest.h>

#include "fk/alexjones.hpp"
#include "fk/cabling.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

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

// (t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1)), centred
LPoly torus_oracle(long a, long b) {
  std::vector<oracle::Z> num(std::size_t(a * b + 2)), den(std::size_t(a + b + 1));
  // (t^{ab} - 1)(t - 1) = t^{ab+1} - t^{ab} - t + 1
  num[std::size_t(a * b + 1)] += 1;
  num[std::size_t(a * b)] -= 1;
  num[1] -= 1;
  num[0] += 1;
  // (t^a - 1)(t^b - 1) = t^{a+b} - t^a - t^b + 1
  den[std::size_t(a + b)] += 1;
  den[std::size_t(a)] -= 1;
  den[std::size_t(b)] -= 1;
  den[0] += 1;
  auto q = oracle::poly_div(num, den);
  long shift = long(q.size() - 1) / 2;
  std::map<long, BigInt> t;
  for (std::size_t i = 0; i < q.size(); ++i) t[long(i) - shift] += q[i];
  return LPoly::from_terms(1, t);
}

}  // namespace

TEST_CASE("alexjones: Alexander polynomials") {
  CHECK(alexander_figure_eight() == LPoly::monomial(-1, 1) + 3 + LPoly::monomial(-1, -1));
  for (long a : {2, 3})
    for (long b = 5; b <= 29; b += 2)
      if (b % a) CHECK(alexander_torus(a, b) == torus_oracle(a, b));
  for (int p : {2, 3})
    for (long w = 4; w <= 10; ++w) {
      long r = p * w + 1;
      LPoly want = alexander_figure_eight().power_substituted(p) * torus_oracle(p, r);
      CHECK(alexander_cable(p, r) == want);
      CHECK(alexander_cable(p, r).eval_at_one() == 1);
    }
}

TEST_CASE("alexjones: printed Alexander polynomials [C(11,2) .. C(19,3)]") {
  for (const auto& fx : ref::alexander_fixtures()) {
    std::map<long, BigInt> t;
    for (auto [e, c] : fx.terms) t[e] += c;
    CAPTURE(fx.label);
    CHECK(alexander_cable(fx.p, fx.r) == LPoly::from_terms(1, t));
  }
}

TEST_CASE("alexjones: symmetric expansion") {
  XSeries e = symmetric_expansion(alexander_figure_eight(), 21);
  auto want = oracle::series_divide({1, -1}, {1, -3, 1}, 11);
  for (long m = 1; m <= 21; m += 2) CHECK(e.at(m) == want[std::size_t(m / 2)]);
  CHECK_THROWS_AS(symmetric_expansion(LPoly::monomial(2, 1) + LPoly::monomial(-3, 0) + LPoly::monomial(2, -1), 11),
                  Error);
  XSeries c = symmetric_expansion(alexander_cable(2, 11), 43);
  CHECK(c.coeffs.begin()->first == 13);
}

TEST_CASE("alexjones: printed limits [Props 3.3-type series]") {
  for (const auto& fx : ref::limit_fixtures()) {
    XSeries e = symmetric_expansion(alexander_cable(fx.p, fx.r), fx.m_last);
    std::map<long, long> printed(fx.coeffs.begin(), fx.coeffs.end());
    for (long m = 1; m <= fx.m_last; m += 2) {
      BigInt got = fx.doubled ? BigInt(2 * e.at(m)) : e.at(m);
      CAPTURE(fx.label);
      CAPTURE(m);
      CHECK(got == (printed.count(m) ? printed[m] : 0));
    }
  }
}

TEST_CASE("alexjones: q -> 1 limit equals twice the expansion") {
  for (int p : {2, 3})
    for (long w = 4; w <= 7; ++w) {
      FkSeries f = gen_cable(p, w, 151);
      MmrReport r = mmr_check(f, alexander_cable(p, p * w + 1), 0);
      CHECK(r.r0_mismatches.empty());
      CHECK(r.ok());
    }
}

TEST_CASE("alexjones: large-color windows vanish for a cable") {
  MmrReport r = mmr_check(gen_cable(2, 5, 241), alexander_cable(2, 11), 3);
  CHECK(r.ok());
  REQUIRE(r.windows.size() == 3);
  CHECK(r.windows[2].k_lo == 99);
  CHECK(r.windows[2].k_hi == 143);
  // too short a series leaves the window empty, which is not a pass
  CHECK_FALSE(mmr_check(gen_cable(2, 5, 101), alexander_cable(2, 11), 3).ok());
  // and a tampered coefficient is caught
  FkSeries f = gen_cable(2, 5, 241);
  f.set(151, f.at(151) + LPoly::monomial(1, 7) - LPoly::monomial(1, 6));
  CHECK_FALSE(mmr_check(f, alexander_cable(2, 11), 2).ok());
}

TEST_CASE("alexjones: figure-eight colored Jones") {
  CHECK(colored_jones_figure_eight(1) == LPoly(1));
  LPoly j2 = LPoly::monomial(1, 2) - LPoly::monomial(1, 1) + 1 - LPoly::monomial(1, -1) + LPoly::monomial(1, -2);
  CHECK(colored_jones_figure_eight(2) == j2);
  for (long n = 1; n <= 9; ++n) CHECK(to_oracle(colored_jones_figure_eight(n)) == oracle::jones_figure_eight(n));
  CHECK(quantum_integer(3) == LPoly::monomial(1, 4, 4) + 1 + LPoly::monomial(1, -4, 4));
  CHECK(colored_jones_figure_eight_unnormalized(-3) == -colored_jones_figure_eight_unnormalized(3));
}

TEST_CASE("alexjones: cable colored Jones") {
  CHECK(colored_jones_cable(2, 11, 1) == LPoly(1));
  for (long n = 1; n <= 5; ++n)
    CHECK(colored_jones_cable_unnormalized(2, 11, n) == colored_jones_cable(2, 11, n) * quantum_integer(n));
  // J_n(q = 1) = 1 for every knot
  for (long n = 1; n <= 6; ++n) CHECK(colored_jones_cable(3, 13, n).eval_at_one() == 1);
}

TEST_CASE("alexjones: hbar expansions [printed]") {
  for (const auto& fx : ref::hbar_fixtures()) {
    HbarSeries s = hbar_jones(fx.p, fx.r, fx.order);
    for (int k = 0; k <= fx.order; ++k) {
      std::vector<Rational> c;
      for (const auto& x : fx.coeffs[std::size_t(k)]) c.push_back(rational_from_string(x));
      CAPTURE(fx.label);
      CAPTURE(k);
      CHECK(s[k] == NPoly(c));
      CHECK(s[k].degree() <= k);
    }
  }
}

TEST_CASE("alexjones: hbar corrections vanish at n = 1") {
  for (long r : {9L, 15L}) {
    HbarSeries s = hbar_jones(2, r, 4);
    CHECK(s[0] == NPoly(Rational(1)));
    for (int k = 1; k <= 4; ++k) CHECK(s[k].eval(1) == 0);
  }
}
