#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

// One line per criterion; with an argument N only criterion N runs.
int main(int argc, char** argv) {
  fk::acceptance::Options o;
  using Fn = fk::acceptance::CriterionResult (*)(const fk::acceptance::Options&);
  const Fn fns[] = {fk::acceptance::h_table_criterion, fk::acceptance::generator_p2_criterion,
                    fk::acceptance::generator_p3_criterion, fk::acceptance::recursion_criterion,
                    fk::acceptance::limit_criterion, fk::acceptance::jones_criterion,
                    fk::acceptance::surgery_criterion, fk::acceptance::property_criterion};
  int lo = 1, hi = 8;
  if (argc > 1) {
    lo = hi = std::atoi(argv[1]);
    if (lo < 1 || lo > 8) {
      std::cerr << "usage: fk_acceptance [criterion 1..8]\n";
      return 2;
    }
  }
  bool all = true;
  for (int i = lo; i <= hi; ++i) {
    auto r = fns[i - 1](o);
    std::cout << r.line() << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    if (!r.pass()) std::cout << "    residuals: " << r.residuals.dump() << "\n";
    std::cout.flush();
    all = all && r.pass();
  }
  return all ? 0 : 1;
}
