#pragma once

// Naive reference implementations, deliberately independent of the library code.

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

// Laurent polynomial as exponent -> coefficient, exponents rational
using Poly = std::map<Q, Z>;

inline void clean(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly mono(const Z& c, const Q& e) {
  Poly p;
  if (c != 0) p[e] = c;
  return p;
}

inline Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly r = a;
  for (const auto& [e, c] : b) r[e] += sign * c;
  clean(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Q e = ea + eb;
      e.canonicalize();
      r[e] += ca * cb;
    }
  clean(r);
  return r;
}

inline Poly subst_pow(const Poly& a, const Q& k) {
  Poly r;
  for (const auto& [e, c] : a) {
    Q x = e * k;
    x.canonicalize();
    r[x] += c;
  }
  clean(r);
  return r;
}

// coefficients of the power series num/den at 0 (integer exponents, den[0] = ±1)
inline std::vector<Z> series_divide(const std::vector<Z>& num, const std::vector<Z>& den, std::size_t n) {
  std::vector<Z> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Z acc = i < num.size() ? num[i] : Z(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * out[i - j];
    out[i] = acc / den[0];
  }
  return out;
}

// Exact polynomial long division over Z for ordinary polynomials (coefficient vectors, low first).
inline std::vector<Z> poly_div(std::vector<Z> a, const std::vector<Z>& b) {
  std::vector<Z> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

// q-integer power shortcut in q: q^n + q^-n - q^j - q^-j
inline Poly figure_eight_factor(long n, long j) {
  Poly p;
  p[Q(n)] += 1;
  p[Q(-n)] += 1;
  p[Q(j)] -= 1;
  p[Q(-j)] -= 1;
  clean(p);
  return p;
}

// Habiro-type cyclotomic sum for the normalized colored Jones of 4_1.
inline Poly jones_figure_eight(long n) {
  Poly total, prod = mono(1, 0);
  for (long k = 0; k < n; ++k) {
    if (k > 0) prod = mul(prod, figure_eight_factor(n, k));
    total = add(total, prod);
  }
  return total;
}

}  // namespace oracle
