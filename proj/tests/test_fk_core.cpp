#include <doctest.h>

#include <thread>

#include "fk/alexjones.hpp"
#include "fk/cabling.hpp"
#include "fk/fk_series.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace fk;

TEST_CASE("fk_core: seeds match the printed table") {
  HTable t;
  auto printed = ref::h_seed_table();
  REQUIRE(printed.size() == 7);
  for (std::size_t i = 0; i < printed.size(); ++i) {
    std::map<long, BigInt> m;
    for (auto [c, e] : printed[i]) m[e] += c;
    CHECK(t.h(long(2 * i + 1)) == LPoly::from_terms(1, m));
  }
  CHECK(h_seeds().size() == 7);
}

TEST_CASE("fk_core: h_k(1) is the expansion of (1 - x)/(1 - 3x + x^2)") {
  HTable t(61);
  auto e = oracle::series_divide({1, -1}, {1, -3, 1}, 31);
  for (long k = 1; k <= 61; k += 2) CHECK(t.h(k).eval_at_one() == e[std::size_t(k / 2)]);
}

TEST_CASE("fk_core: structure of the extended table") {
  HTable t;
  for (long k = 15; k <= 61; k += 2) {
    const LPoly& h = t.h(k);
    CHECK(h.is_palindromic());
    CHECK(h.sign_pattern() == 1);
    CHECK(h.grid() == 1);
    CHECK(h.min_exponent() == Rational(-((k - 1) * (k - 1) / 16)));
  }
  CHECK(t.h(15).to_string().rfind("2q⁻¹² + 2q⁻¹¹ + 6q⁻¹⁰ + 8q⁻⁹ + 13q⁻⁸", 0) == 0);
  CHECK(t.kmax() >= 61);
}

TEST_CASE("fk_core: figure-eight series passes the large-color windows") {
  FkSeries f = figure_eight_series(81);
  MmrReport r = mmr_check(f, alexander_figure_eight(), 3);
  // f_m(1) = E_m for the knot itself, so the r = 0 comparison (against 2E) is not the one to use here
  for (const auto& w : r.windows) {
    CHECK(w.k_lo <= w.k_hi);
    CHECK(w.nonzero == 0);
  }
}

TEST_CASE("fk_core: table copies, caching constructor and threads") {
  HTable a(31);
  HTable b = a;
  CHECK(b.h(31) == a.h(31));
  HTable c(a.entries());
  CHECK(c.h(29) == a.h(29));
  std::vector<LPoly> bad = a.entries();
  bad[2] = bad[2] + 1;
  CHECK_THROWS_AS(HTable{bad}, Error);

  HTable fresh;
  std::vector<std::thread> th;
  std::vector<LPoly> got(4);
  for (int i = 0; i < 4; ++i) th.emplace_back([&, i] { got[std::size_t(i)] = fresh.h(41 - 2 * i); });
  for (auto& x : th) x.join();
  for (int i = 0; i < 4; ++i) CHECK(got[std::size_t(i)] == a.h(41 - 2 * i));
}

TEST_CASE("fk_core: series indexing and mirror") {
  FkSeries f = gen_cable(2, 5, 45);
  CHECK(f.at(-13) == -f.at(13));
  CHECK(f.at(14).is_zero());
  CHECK(f.at(0).is_zero());
  CHECK(format_coefficient("f", 13, f.at(13)) == "f⁺_13(q) = 2q⁶");
  CHECK(format_coefficient("f", 35, f.at(35)) == "f⁻_35(q) = -2q¹⁸");
  FkSeries m = mirror(f);
  CHECK(m.knot.mirrored);
  CHECK(m.at(13) == LPoly::monomial(2, -6));
  CHECK(mirror(m) == f);
  auto lim = q1_limit(f);
  CHECK(lim[13] == 2);
  CHECK(lim[35] == -2);
  CHECK(f.knot.name() == "C(11,2)(4_1)");
}
