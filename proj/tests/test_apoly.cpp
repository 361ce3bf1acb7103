#include <doctest.h>

#include <random>

#include "fk/apoly.hpp"
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

// L^k g(M) = g(t^{2k} M) L^k, and L fixes constants
BiPoly act(const NCOperator& op, const BiPoly& g) {
  BiPoly out;
  for (const auto& [k, c] : op.terms) out += c * g.subst_m(2 * k, 1);
  return out;
}

NCOperator random_op(std::mt19937_64& g) {
  std::uniform_int_distribution<long> e(-3, 3), c(-4, 4), n(1, 3), k(0, 2);
  NCOperator op;
  for (long i = n(g); i > 0; --i) {
    BiPoly b = BiPoly::from_list({{c(g), e(g), e(g)}, {c(g), e(g), e(g)}});
    op = nc_add(op, nc_from(b, k(g)));
  }
  return op;
}

// (q^{n/2} - q^{-n/2}) J_n, the unnormalized Jones up to the constant t^2 - t^-2
oracle::Poly scaled_jones(long n) {
  return oracle::mul(oracle::add(oracle::mono(1, oracle::Q(n, 2)), oracle::mono(-1, oracle::Q(-n, 2))),
                     oracle::jones_figure_eight(n));
}

}  // namespace

TEST_CASE("apoly: L M = t^2 M L") {
  NCOperator L = nc_from(BiPoly(1), 1);
  NCOperator M = nc_from(BiPoly::monomial(1, 0, 1));
  CHECK(nc_mul(L, M) == nc_from(BiPoly::monomial(1, 2, 1), 1));
  CHECK(nc_mul(M, L) == nc_from(BiPoly::monomial(1, 0, 1), 1));
}

TEST_CASE("apoly: multiplication is associative and acts consistently") {
  std::mt19937_64 g(3);
  for (int i = 0; i < 200; ++i) {
    NCOperator a = random_op(g), b = random_op(g), c = random_op(g);
    CHECK(nc_mul(nc_mul(a, b), c) == nc_mul(a, nc_mul(b, c)));
    BiPoly f = BiPoly::from_list({{1, 1, 2}, {-2, 0, -1}});
    CHECK(act(nc_mul(a, b), f) == act(a, act(b, f)));
    long s = long(i % 7) - 3;
    CHECK(apply_to_monomial(a, s) == act(a, BiPoly::monomial(1, 0, 2 * s)));
  }
}

TEST_CASE("apoly: corrected figure-eight operators annihilate the colored Jones") {
  FigureEightOperators o = figure_eight_operators(OperatorVariant::corrected);
  for (long n = 1; n <= 7; ++n) {
    Rational mx(n, 2);
    oracle::Poly lhs;
    lhs = oracle::add(lhs, oracle::mul(to_oracle(o.P2.eval_m_qpow(mx)), scaled_jones(n + 2)));
    lhs = oracle::add(lhs, oracle::mul(to_oracle(o.P1.eval_m_qpow(mx)), scaled_jones(n + 1)));
    lhs = oracle::add(lhs, oracle::mul(to_oracle(o.P0.eval_m_qpow(mx)), scaled_jones(n)));
    CHECK(lhs == to_oracle(o.b.eval_m_qpow(mx)));
  }
}

TEST_CASE("apoly: printed figure-eight operators do not") {
  FigureEightOperators o = figure_eight_operators(OperatorVariant::as_printed);
  Rational mx(3, 2);
  oracle::Poly lhs;
  lhs = oracle::add(lhs, oracle::mul(to_oracle(o.P2.eval_m_qpow(mx)), scaled_jones(5)));
  lhs = oracle::add(lhs, oracle::mul(to_oracle(o.P1.eval_m_qpow(mx)), scaled_jones(4)));
  lhs = oracle::add(lhs, oracle::mul(to_oracle(o.P0.eval_m_qpow(mx)), scaled_jones(3)));
  CHECK_FALSE(lhs == to_oracle(o.b.eval_m_qpow(mx)));
}

TEST_CASE("apoly: build_ahat2 parameters") {
  CHECK_THROWS_AS(build_ahat2(10), Error);
  CHECK_THROWS_AS(build_ahat2(7), Error);
  NCOperator op = build_ahat2(11);
  CHECK(op.l_degree() == 4);
}

TEST_CASE("apoly: recursion for r=11 matches the printed shape") {
  MRecursion rec = m_recursion_for(11);
  auto fx = ref::recursion_fixtures()[0];
  CHECK(rec.span == fx.span);
  CHECK(rec.window == fx.window);
  CHECK(rec.offsets() == fx.offsets);
  LeadingForm lf = rec.leading_form();
  CHECK(lf.binomial);
  CHECK(lf.beta == 89);
  CHECK(lf.k == 1);
  CHECK(lf.coeff == -1);
  CHECK(rec.removed_m_degree == 60);

  FkSeries gen = gen_cable(2, 5, 161);
  FkSeries solved = solve_forward(rec, gen_cable(2, 5, rec.window), 161);
  for (long m = 1; m <= 161; m += 2) CHECK(solved.at(m) == gen.at(m));
  AnnihilationReport rep = verify_annihilation(rec, gen);
  CHECK(rep.ok());
  CHECK(rep.instances > 100);

  // a wrong initial coefficient either breaks an exact division or propagates
  FkSeries broken = gen_cable(2, 5, rec.window);
  broken.set(57, broken.at(57) + LPoly::monomial(1, 3));
  bool noticed = false;
  try {
    FkSeries s = solve_forward(rec, broken, 121);
    for (long m = rec.window + 2; m <= 121; m += 2) noticed = noticed || !(s.at(m) == gen.at(m));
  } catch (const Error& e) {
    noticed = e.kind() == ErrorKind::NotDivisible;
  }
  CHECK(noticed);
}

TEST_CASE("apoly: content reduction is complete") {
  ContentReduction cr = reduce_content(build_ahat2(13));
  CHECK(cr.residual_gcd_degree == 0);
  CHECK(cr.removed_m_degree == 60);
  CHECK(cr.reduced.l_degree() == 4);
}

TEST_CASE("apoly: recursion from the printed operator text fails") {
  MRecursion rec = m_recursion_for(11, OperatorVariant::as_printed);
  CHECK(rec.span != 102);
  CHECK_FALSE(verify_annihilation(rec, gen_cable(2, 5, 129)).ok());
}
