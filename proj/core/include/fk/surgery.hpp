#pragma once

#include <map>
#include <string>

#include "fk/fk_series.hpp"

namespace fk {

struct SurgerySlope {
  long p = 1;  // slope is -p/r
  long r = 1;
  long b = 0;  // Spin^c label, taken mod p
};

// Parses "-p/r" (or "-p"); only negative slopes are accepted.
SurgerySlope parse_slope(const std::string& s, long b = 0);

// Ẑ_b = sign * 2^{-c} q^{Δ_b} (sum_k coeffs[k] q^k) + O(q^{order+1}) relative to q^{Δ_b}.
struct QSeries {
  Rational delta_b;   // raw_min - (p^2 + r^2)/(4pr)
  Rational raw_min;   // minimal exponent of the transformed series
  std::map<long, BigInt> coeffs;  // integer offsets from raw_min
  long order = 0;     // every offset <= order is final
  long c = 0;         // dyadic scale 2^{-c}
  int sign = 1;       // global sign applied so the leading coefficient is negative
  BigInt content;     // gcd of coeffs
  long m_max_used = 0;

  std::map<long, BigInt> primitive() const;  // coeffs / content with negative leading coefficient
  std::string to_string(long max_terms = 20) const;
};

// Smallest exponent that a coefficient f_m with m > m_max could reach.
Rational guaranteed_exponent(const SurgerySlope& slope, long m_max);

QSeries laplace_zhat(const FkSeries& f, const SurgerySlope& slope, long q_max);

}  // namespace fk
