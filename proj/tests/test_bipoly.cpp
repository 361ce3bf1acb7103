#include <doctest.h>

#include <random>

#include "fk/bipoly.hpp"

using namespace fk;

namespace {
BiPoly random_bi(std::mt19937_64& g, int n) {
  std::uniform_int_distribution<long> e(-6, 6), c(-9, 9);
  std::vector<std::tuple<long, long, long>> t;
  for (int i = 0; i < n; ++i) t.emplace_back(c(g), e(g), e(g));
  return BiPoly::from_list(t);
}
}  // namespace

TEST_CASE("bipoly: ring operations") {
  BiPoly a = BiPoly::from_list({{1, 0, 0}, {-1, 2, 1}});  // 1 - t^2 M
  BiPoly b = BiPoly::from_list({{1, 0, 0}, {1, 2, 1}});
  CHECK(a * b == BiPoly::from_list({{1, 0, 0}, {-1, 4, 2}}));
  CHECK((a + b) == BiPoly(2));
  CHECK((a - a).is_zero());
  CHECK(a.max_m() == 1);
  CHECK(a.min_t() == 0);
  CHECK(a.max_t() == 2);
}

TEST_CASE("bipoly: substitution and evaluation") {
  BiPoly a = BiPoly::from_list({{3, 1, 2}});  // 3 t M^2
  CHECK(a.subst_m(2, 1) == BiPoly::from_list({{3, 5, 2}}));
  CHECK(a.subst_m(0, 2) == BiPoly::from_list({{3, 1, 4}}));
  // t = q^(1/4), M = q^(1/2): 3 q^(1/4) q = 3 q^(5/4)
  CHECK(a.eval_m_qpow(Rational(1, 2)) == LPoly::monomial(3, 5, 4));
  CHECK(a.eval(Rational(2), Rational(1, 3)) == Rational(2, 3));
}

TEST_CASE("bipoly: exact division round-trip") {
  std::mt19937_64 g(5);
  for (int i = 0; i < 200; ++i) {
    BiPoly a = random_bi(g, 4), b = random_bi(g, 3);
    if (b.is_zero()) continue;
    auto q = bi_div_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  BiPoly one_minus = BiPoly::from_list({{1, 0, 0}, {-1, 0, 1}});
  CHECK_FALSE(bi_div_exact(BiPoly::from_list({{1, 0, 0}, {1, 0, 1}}), one_minus).has_value());
}

TEST_CASE("bipoly: modular image") {
  BiPoly a = BiPoly::from_list({{2, 1, 1}, {1, 0, 3}});
  auto img = a.mod_image(10, 1000003);
  REQUIRE(img.size() == 3);
  CHECK(img[0] == 20);
  CHECK(img[1] == 0);
  CHECK(img[2] == 1);
}
