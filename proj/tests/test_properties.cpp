#include <doctest.h>

#include "fk/cabling.hpp"
#include "properties.hpp"

using namespace fk;

TEST_CASE("properties: ring axioms") { CHECK(props::ring_axioms(1000, 1).failures == 0); }

TEST_CASE("properties: division round-trip") { CHECK(props::division_round_trip(1000, 2).failures == 0); }

TEST_CASE("properties: mirror involution") { CHECK(props::mirror_involution(1000, 3).failures == 0); }

TEST_CASE("properties: sign segregation") {
  HTable t;
  auto r = props::sign_segregation(1000, 4, t);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}

TEST_CASE("properties: annihilation perturbation, r = 13") {
  MRecursion rec = m_recursion_for(13);
  FkSeries f = gen_cable(2, 6, 133);
  auto r = props::annihilation_perturbation(1000, 5, rec, f);
  INFO(r.first_failure);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}

TEST_CASE("properties: the perturbation suite notices a broken recursion") {
  MRecursion rec = m_recursion_for(11);
  FkSeries wrong = gen_cable(2, 6, 129);  // series of a different cable
  auto r = props::annihilation_perturbation(50, 6, rec, wrong);
  CHECK(r.failures > 0);
}
