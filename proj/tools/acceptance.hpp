#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fk/json.hpp"

namespace fk::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double budget_seconds = 0;  // 0 means no runtime bound
  std::vector<std::string> notes;
  json residuals = json::object();
  bool within_budget() const { return budget_seconds <= 0 || seconds < budget_seconds; }
  bool pass() const { return correct && within_budget(); }
  std::string line() const;
};

struct Options {
  long property_cases = 1000;
  std::uint64_t seed = 0x5eed2024;
  std::ostream* progress = nullptr;
};

CriterionResult h_table_criterion(const Options& o);
CriterionResult generator_p2_criterion(const Options& o);
CriterionResult generator_p3_criterion(const Options& o);
CriterionResult recursion_criterion(const Options& o);
CriterionResult limit_criterion(const Options& o);
CriterionResult jones_criterion(const Options& o);
CriterionResult surgery_criterion(const Options& o);
CriterionResult property_criterion(const Options& o);

std::vector<CriterionResult> run_all(const Options& o);

// Consistency of one cable: limit and MMR windows, plus recursion against the
// generator when p = 2.
CriterionResult target_checks(int p, long w, const Options& o);

json report_json(const std::vector<CriterionResult>& results);

}  // namespace fk::acceptance
