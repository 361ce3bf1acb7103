#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fk/apoly.hpp"
#include "fk/fk_series.hpp"

namespace fk::props {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool ok() const { return failures == 0 && cases > 0; }
};

PropertyResult ring_axioms(long cases, std::uint64_t seed);
PropertyResult division_round_trip(long cases, std::uint64_t seed);
PropertyResult mirror_involution(long cases, std::uint64_t seed);
PropertyResult sign_segregation(long cases, std::uint64_t seed, HTable& table);
// Perturbs one coefficient of gen_cable(2, w, m_max) and requires some relation
// instance touching it to stop vanishing.
PropertyResult annihilation_perturbation(long cases, std::uint64_t seed, const MRecursion& rec, const FkSeries& f);

std::vector<PropertyResult> all(long cases, std::uint64_t seed, HTable& table, const MRecursion& rec, const FkSeries& f);

}  // namespace fk::props
