#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fk/lpoly.hpp"

namespace fk {

using RatCoeff = Rational;

// Polynomial in the color n with rational coefficients; c[i] multiplies n^i.
class NPoly {
 public:
  NPoly() = default;
  NPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit NPoly(std::vector<Rational> c);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  Rational eval(const Rational& n) const;

  NPoly& operator+=(const NPoly& o);
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator*(const NPoly& a, const NPoly& b);
  friend bool operator==(const NPoly& a, const NPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const NPoly& a, const NPoly& b) { return !(a == b); }

  // e.g. "11891/12 - 1137n^2 + 1753/12n^4"
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Power series in hbar truncated after hbar^order.
class HbarSeries {
 public:
  HbarSeries() = default;
  explicit HbarSeries(int order);
  HbarSeries(int order, std::vector<NPoly> coeffs);

  int order() const { return order_; }
  const NPoly& operator[](int k) const { return c_[std::size_t(k)]; }
  NPoly& operator[](int k) { return c_[std::size_t(k)]; }
  const std::vector<NPoly>& coeffs() const { return c_; }

  friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  friend bool operator==(const HbarSeries& a, const HbarSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  int order_ = 0;
  std::vector<NPoly> c_{NPoly()};
};

// e^{a hbar} truncated at the given order.
HbarSeries hbar_expand_qpow(const Rational& a, int order);
// p(e^hbar) for a Laurent polynomial p in q.
HbarSeries hbar_expand(const LPoly& p, int order);
// Coefficient of hbar^k in p(e^hbar): sum_e c_e e^k / k!.
Rational hbar_coefficient(const LPoly& p, int k);

// Interpolating polynomial of degree <= degree_bound; extra samples must agree.
NPoly interpolate_npoly(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound);

}  // namespace fk
