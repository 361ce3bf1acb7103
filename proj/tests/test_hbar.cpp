#include <doctest.h>

#include "fk/hbar.hpp"

using namespace fk;

TEST_CASE("hbar: e^(a hbar) coefficients are a^k/k!") {
  HbarSeries s = hbar_expand_qpow(Rational(3, 2), 4);
  CHECK(s[0].coeff(0) == 1);
  CHECK(s[1].coeff(0) == Rational(3, 2));
  CHECK(s[2].coeff(0) == Rational(9, 8));
  CHECK(s[3].coeff(0) == Rational(9, 16));
  CHECK(s[4].coeff(0) == Rational(27, 128));
}

TEST_CASE("hbar: exponential law and inverse") {
  for (int a = -6; a <= 6; ++a)
    for (int b = -3; b <= 3; ++b) {
      HbarSeries x = hbar_expand_qpow(Rational(a, 4), 6) * hbar_expand_qpow(Rational(b, 2), 6);
      CHECK(x == hbar_expand_qpow(Rational(a, 4) + Rational(b, 2), 6));
    }
  HbarSeries one = hbar_expand_qpow(Rational(5), 6) * hbar_expand_qpow(Rational(-5), 6);
  CHECK(one == hbar_expand_qpow(Rational(0), 6));
}

TEST_CASE("hbar: expansion of a Laurent polynomial") {
  LPoly p = LPoly::monomial(1, 2) + LPoly::monomial(1, -2) - 2;  // 2 cosh(2 hbar) - 2
  HbarSeries s = hbar_expand(p, 4);
  CHECK(s[0].is_zero());
  CHECK(s[1].is_zero());
  CHECK(s[2].coeff(0) == 4);
  CHECK(s[3].is_zero());
  CHECK(s[4].coeff(0) == Rational(4, 3));
  CHECK(hbar_coefficient(p, 2) == 4);
}

TEST_CASE("hbar: interpolation") {
  NPoly target(std::vector<Rational>{Rational(11891, 12), 0, -1137, 0, Rational(1753, 12)});
  std::vector<std::pair<Rational, Rational>> samples;
  for (int n = 1; n <= 8; ++n) samples.push_back({n, target.eval(n)});
  CHECK(interpolate_npoly(samples, 4) == target);
  CHECK(target.to_string() == "11891/12 - 1137n^2 + 1753/12n^4");
  samples.back().second += 1;
  CHECK_THROWS_AS(interpolate_npoly(samples, 4), Error);
  try {
    interpolate_npoly(samples, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentSamples);
  }
}

TEST_CASE("hbar: npoly arithmetic") {
  NPoly a(std::vector<Rational>{1, 1});  // 1 + n
  NPoly b(std::vector<Rational>{-1, 1}); // -1 + n
  CHECK(a * b == NPoly(std::vector<Rational>{-1, 0, 1}));
  CHECK((a + b).to_string() == "2n");
  CHECK(NPoly().to_string() == "0");
}
