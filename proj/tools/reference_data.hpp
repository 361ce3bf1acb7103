#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fk/cabling.hpp"
#include "fk/hbar.hpp"

namespace fk::ref {

// f_m = sign * 2 * sum h_k q^e as printed
struct CoefficientRow {
  long m;
  int sign;  // 0 for a printed vanishing coefficient
  std::vector<HTerm> terms;
};

struct CableFixture {
  int p;
  long r;
  std::string label;
  std::vector<CoefficientRow> rows;
};

std::vector<CableFixture> cable_fixtures();

// Rows of the general-w patterns: h_{ha w + hb} q^{nm n + ea w + eb + dm Δ}.
struct SymTerm {
  long ha, hb;
  long nm;
  long ea, eb;
  long dm;
};
struct SymRow {
  int p;
  int sign;
  long ma, mb;  // m = ma w + mb
  std::vector<SymTerm> terms;
  std::string note;  // non-empty when the printed row carries a corrected typo
  long printed_ea_first = 0;  // w-coefficient of the first exponent as printed, when corrected
};

std::vector<SymRow> pattern_rows(int p);
HCombination evaluate_row(const SymRow& row, long w);

// h_1 ... h_13 as (coefficient, exponent) lists.
std::vector<std::vector<std::pair<long, long>>> h_seed_table();

struct HbarFixture {
  int p;
  long r;
  std::string label;
  int order;
  std::vector<std::vector<std::string>> coeffs;  // coeffs[k] = n^0, n^1, ... for hbar^k, k >= 2
};
std::vector<HbarFixture> hbar_fixtures();

struct AlexanderFixture {
  int p;
  long r;
  std::string label;
  std::vector<std::pair<long, long>> terms;  // (exponent, coefficient)
};
std::vector<AlexanderFixture> alexander_fixtures();

struct LimitFixture {
  int p;
  long r;
  std::string label;
  bool doubled;  // printed values are 2E rather than E
  long m_last;   // printed through x^{m_last/2}
  std::vector<std::pair<long, long>> coeffs;
};
std::vector<LimitFixture> limit_fixtures();

struct SurgeryFixture {
  int p;
  long w;
  long slope_p, slope_r;
  std::string label;
  Rational delta;
  std::vector<std::pair<long, long>> coeffs;
};
std::vector<SurgeryFixture> surgery_fixtures();

// Shape of the printed m-recursions: f_{v+span} = -1/(q^a (1 - q^{(beta + v)/2})) [sum over offsets].
struct RecursionFixture {
  long r;
  long span;
  long window;
  long beta;  // 0 if no closed form is known
  std::vector<long> offsets;
};
std::vector<RecursionFixture> recursion_fixtures();

}  // namespace fk::ref
