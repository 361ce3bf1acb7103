#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fk/lpoly.hpp"

namespace fk {

// Laurent polynomial in (t, M) over Z. Terms are keyed by (M exponent, t exponent)
// so the last entry is the leading term in the M-then-t lex order.
class BiPoly {
 public:
  using Key = std::pair<long, long>;  // (mpow, tpow)

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const BigInt& c, long tpow, long mpow);
  // sum of c * t^a * M^b for (c, a, b)
  static BiPoly from_list(const std::vector<std::tuple<long, long, long>>& terms);

  const std::map<Key, BigInt>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  long min_m() const;
  long max_m() const;
  long min_t() const;
  long max_t() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  BiPoly operator-() const;
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // M -> t^ta * M^mb
  BiPoly subst_m(long ta, long mb) const;
  // t = q^(1/4) and M = q^(mexp): evaluate to a Laurent polynomial in q.
  LPoly eval_m_qpow(const Rational& mexp) const;
  // Rational value at numeric t, M.
  Rational eval(const Rational& t, const Rational& m) const;

  // Univariate image in M (shifted so the lowest M power is M^0) at t = t0 mod p.
  std::vector<std::uint64_t> mod_image(std::uint64_t t0, std::uint64_t p) const;

  std::string to_string() const;

  void add_term(const Key& k, const BigInt& c);

 private:
  std::map<Key, BigInt> t_;
};

// Exact quotient a / b in Z[t^±, M^±], or nullopt if b does not divide a.
std::optional<BiPoly> bi_div_exact(const BiPoly& a, const BiPoly& b);

}  // namespace fk
