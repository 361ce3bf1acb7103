#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fk/error.hpp"

namespace fk {

using BigInt = mpz_class;
using Rational = mpq_class;

// Laurent polynomial in q with integer coefficients. Exponents live on the grid
// (1/grid)Z with grid in {1, 2, 4}; the stored grid is always the smallest one
// that holds every exponent, so structural equality is value equality.
class LPoly {
 public:
  LPoly() = default;
  LPoly(long c);  // NOLINT(google-explicit-constructor)
  LPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static LPoly monomial(const BigInt& c, long scaled_exp, int grid = 1);
  static LPoly monomial(const BigInt& c, const Rational& exp);
  static LPoly from_terms(int grid, const std::map<long, BigInt>& terms);

  int grid() const { return grid_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t num_terms() const;

  // Scaled exponents (exponent * grid) of the lowest/highest term. Zero poly: 0.
  long low_scaled() const { return low_; }
  long high_scaled() const { return c_.empty() ? low_ : low_ + long(c_.size()) - 1; }
  Rational min_exponent() const;
  Rational max_exponent() const;

  BigInt coeff(const Rational& exp) const;
  std::map<long, BigInt> terms() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) fn(low_ + long(i), c_[i]);
  }

  // Same value re-expressed on a finer grid g (a multiple of grid()); for
  // internal kernels only, the result is not normalized.
  std::vector<BigInt> dense_on(int g, long& low) const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);
  LPoly& operator*=(const BigInt& s);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(LPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const LPoly& a, const LPoly& b);
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

  // Multiply by q^e.
  LPoly shifted(const Rational& e) const;
  // Substitute q -> q^k for a positive integer k.
  LPoly power_substituted(long k) const;

  BigInt eval_at_one() const;
  // +1 if every coefficient is positive, -1 if every one is negative, 0 otherwise
  // (including the zero polynomial).
  int sign_pattern() const;
  bool is_palindromic() const;

  std::string to_string(const std::string& var = "q") const;

 private:
  LPoly(int grid, long low, std::vector<BigInt> c);
  void normalize();
  static LPoly combine(const LPoly& a, const LPoly& b, bool sub);

  int grid_ = 1;
  long low_ = 0;
  std::vector<BigInt> c_;

  friend LPoly div_exact(const LPoly& a, const LPoly& b);
};

enum class ArithKind { add, sub, mul, scale };

// For kind == scale, b must be a constant.
LPoly lp_arith(const LPoly& a, const LPoly& b, ArithKind kind);
LPoly div_exact(const LPoly& a, const LPoly& b);
LPoly invert_q(const LPoly& a);

inline LPoly lp_div_exact(const LPoly& a, const LPoly& b) { return div_exact(a, b); }
inline LPoly lp_invert_q(const LPoly& a) { return invert_q(a); }

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);
// Exponent rendered as unicode superscript, e.g. "⁻¹", "¹³ᐟ²".
std::string superscript(const Rational& e);

}  // namespace fk
