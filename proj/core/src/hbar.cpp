#include "fk/hbar.hpp"

#include <sstream>

namespace fk {

NPoly::NPoly(const Rational& c) : c_{c} { trim(); }

NPoly::NPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void NPoly::trim() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational NPoly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return 0;
  return c_[std::size_t(i)];
}

Rational NPoly::eval(const Rational& n) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

NPoly& NPoly::operator+=(const NPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

NPoly operator*(const NPoly& a, const NPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return NPoly(std::move(out));
}

std::string NPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << rational_to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

HbarSeries::HbarSeries(int order) : order_(order), c_(std::size_t(order + 1)) {
  if (order < 0) throw Error(ErrorKind::BadParameter, "hbar order must be >= 0");
}

HbarSeries::HbarSeries(int order, std::vector<NPoly> coeffs) : HbarSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries r(std::min(a.order_, b.order_));
  for (int k = 0; k <= r.order_; ++k) r[k] = a[k] + b[k];
  return r;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i)
    for (int j = 0; i + j <= r.order_; ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::string HbarSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (c_[std::size_t(k)].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[std::size_t(k)].to_string() << ")";
    if (k == 1) os << "ħ";
    if (k >= 2) os << "ħ^" << k;
  }
  if (first) os << "0";
  os << " + O(ħ^" << order_ + 1 << ")";
  return os.str();
}

HbarSeries hbar_expand_qpow(const Rational& a, int order) {
  HbarSeries r(order);
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term = term * a / k;
    r[k] = NPoly(term);
  }
  return r;
}

Rational hbar_coefficient(const LPoly& p, int k) {
  Rational acc = 0;
  p.for_each([&](long e, const BigInt& c) {
    BigInt ek;
    mpz_pow_ui(ek.get_mpz_t(), BigInt(e).get_mpz_t(), (unsigned long)k);
    acc += Rational(c * ek);
  });
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), (unsigned long)p.grid(), (unsigned long)k);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), (unsigned long)k);
  acc /= Rational(den * fact);
  acc.canonicalize();
  return acc;
}

HbarSeries hbar_expand(const LPoly& p, int order) {
  HbarSeries r(order);
  for (int k = 0; k <= order; ++k) r[k] = NPoly(hbar_coefficient(p, k));
  return r;
}

NPoly interpolate_npoly(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorKind::BadParameter, "degree bound must be >= 0");
  std::size_t need = std::size_t(degree_bound) + 1;
  if (samples.size() < need)
    throw Error(ErrorKind::InconsistentSamples,
                "need " + std::to_string(need) + " samples, got " + std::to_string(samples.size()));
  for (std::size_t i = 0; i < need; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (samples[i].first == samples[j].first)
        throw Error(ErrorKind::InconsistentSamples, "repeated sample point " + rational_to_string(samples[i].first));
  // Newton divided differences on the first degree_bound+1 points
  std::vector<Rational> x(need), dd(need);
  for (std::size_t i = 0; i < need; ++i) {
    x[i] = samples[i].first;
    dd[i] = samples[i].second;
  }
  for (std::size_t j = 1; j < need; ++j)
    for (std::size_t i = need - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
      if (i == j) break;
    }
  NPoly p(dd[need - 1]);
  for (std::size_t k = need - 1; k-- > 0;) p = p * NPoly(std::vector<Rational>{-x[k], 1}) + NPoly(dd[k]);
  for (std::size_t i = need; i < samples.size(); ++i)
    if (p.eval(samples[i].first) != samples[i].second)
      throw Error(ErrorKind::InconsistentSamples, "sample at n=" + rational_to_string(samples[i].first) +
                                                      " disagrees with the degree-" + std::to_string(degree_bound) +
                                                      " interpolant");
  return p;
}

}  // namespace fk
