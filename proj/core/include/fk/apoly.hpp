#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fk/bipoly.hpp"
#include "fk/fk_series.hpp"

namespace fk {

// sum_k c_k(t, M) L^k with L M = t^2 M L; coefficients stored to the left of L.
struct NCOperator {
  std::map<long, BiPoly> terms;

  long l_degree() const { return terms.empty() ? -1 : terms.rbegin()->first; }
  const BiPoly& coeff(long k) const;
  friend bool operator==(const NCOperator& a, const NCOperator& b) { return a.terms == b.terms; }
};

NCOperator nc_mul(const NCOperator& a, const NCOperator& b);
NCOperator nc_add(const NCOperator& a, const NCOperator& b);
NCOperator nc_from(const BiPoly& c, long lpow = 0);
// Apply the operator to x^s = M^{2s}: sum_k c_k t^{4ks} M^{2s}.
BiPoly apply_to_monomial(const NCOperator& op, long s);

enum class OperatorVariant { as_printed, corrected };

struct FigureEightOperators {
  BiPoly P0, P1, P2;
  BiPoly Q0, Q1, Q2;
  BiPoly b;  // numerator of b(t,M); the 1/(t^2 - t^-2) is a constant and dropped
  BiPoly c0, c1, c2;
  BiPoly B;
};

FigureEightOperators figure_eight_operators(OperatorVariant variant = OperatorVariant::corrected);

// Denominator-cleared (L - 1) B^-1 Q (M^r L + t^-2r M^-r), i.e.
// (B(t,M) L - B(t,t^2 M)) Q (M^r L + t^-2r M^-r). L-degree 4.
NCOperator build_ahat2(long r, OperatorVariant variant = OperatorVariant::corrected);

struct ContentReduction {
  NCOperator reduced;
  std::vector<BiPoly> removed;  // left factors divided out, in removal order
  long removed_m_degree = 0;
  long residual_gcd_degree = 0;  // degree in M of the gcd of the remaining coefficients mod p
};

// Divides out the common left factor of the L-coefficients built from
// binomials 1 ± t^a M^b and shifted copies of the P̂₁ quartic.
ContentReduction reduce_content(const NCOperator& op);

// Coefficient of f_{v+offset} as sum_k by_k[k](q) q^{k v / 2}.
struct RecursionTerm {
  long offset = 0;
  std::map<long, LPoly> by_k;
  LPoly eval(long v) const;
  bool is_zero() const { return by_k.empty(); }
};

// T_span(v) = coeff * q^{(alpha + k v)/2} (1 - q^{(beta + v)/2}) when binomial
struct LeadingForm {
  bool binomial = false;
  BigInt coeff;
  Rational alpha;
  long k = 0;
  Rational beta;
  std::string to_string() const;
};

struct MRecursion {
  long r = 0;
  long span = 0;
  long window = 0;  // f_1 ... f_window are initial data
  std::vector<RecursionTerm> terms;  // strictly decreasing offsets; terms.front() is the leading one
  long removed_m_degree = 0;

  const RecursionTerm& leading() const { return terms.front(); }
  std::vector<long> offsets() const;
  LeadingForm leading_form() const;
};

MRecursion m_recursion(const NCOperator& op, long r = 0);
MRecursion m_recursion_for(long r, OperatorVariant variant = OperatorVariant::corrected);

// sum_s T_s(v) f_{v+s}
LPoly relation_residual(const MRecursion& rec, const FkSeries& f, long v);

FkSeries solve_forward(const MRecursion& rec, const FkSeries& initial, long m_max);

struct AnnihilationReport {
  struct Entry {
    long v;
    LPoly residual;
  };
  std::vector<Entry> entries;  // only nonzero residuals are kept
  long instances = 0;
  long largest_v = 0;
  bool ok() const { return entries.empty(); }
};

// Checks every relation instance whose indices all lie in [-m_max, m_max].
AnnihilationReport verify_annihilation(const MRecursion& rec, const FkSeries& f);

}  // namespace fk
