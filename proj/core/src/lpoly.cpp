#include "fk/lpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::GridViolation: return "GridViolation";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::UnsupportedW: return "UnsupportedW";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NonUnitLeading: return "NonUnitLeading";
    case ErrorKind::NonSolvableLeading: return "NonSolvableLeading";
  }
  return "Error";
}

namespace {

void check_grid(int g) {
  if (g != 1 && g != 2 && g != 4)
    throw Error(ErrorKind::GridViolation, "grid denominator must be 1, 2 or 4, got " + std::to_string(g));
}

int lcm_grid(int a, int b) { return std::lcm(a, b); }

}  // namespace

LPoly::LPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LPoly::LPoly(const BigInt& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

LPoly::LPoly(int grid, long low, std::vector<BigInt> c) : grid_(grid), low_(low), c_(std::move(c)) {
  normalize();
}

LPoly LPoly::monomial(const BigInt& c, long scaled_exp, int grid) {
  check_grid(grid);
  if (sgn(c) == 0) return {};
  return LPoly(grid, scaled_exp, std::vector<BigInt>{c});
}

LPoly LPoly::monomial(const BigInt& c, const Rational& exp) {
  Rational e = exp;
  e.canonicalize();
  long den = e.get_den().get_si();
  if (den != 1 && den != 2 && den != 4)
    throw Error(ErrorKind::GridViolation, "exponent " + rational_to_string(e) + " is off the q^(1/4) grid");
  long scaled = BigInt(e.get_num() * (4 / den)).get_si();
  return monomial(c, scaled, 4);
}

LPoly LPoly::from_terms(int grid, const std::map<long, BigInt>& terms) {
  check_grid(grid);
  std::vector<std::pair<long, BigInt>> nz;
  for (const auto& [e, c] : terms)
    if (sgn(c) != 0) nz.emplace_back(e, c);
  if (nz.empty()) return {};
  long lo = nz.front().first, hi = nz.back().first;
  std::vector<BigInt> c(std::size_t(hi - lo + 1));
  for (auto& [e, v] : nz) c[std::size_t(e - lo)] = v;
  return LPoly(grid, lo, std::move(c));
}

void LPoly::normalize() {
  std::size_t a = 0, b = c_.size();
  while (a < b && sgn(c_[a]) == 0) ++a;
  while (b > a && sgn(c_[b - 1]) == 0) --b;
  if (a == b) {
    c_.clear();
    low_ = 0;
    grid_ = 1;
    return;
  }
  if (a > 0 || b < c_.size()) {
    c_.erase(c_.begin() + long(b), c_.end());
    c_.erase(c_.begin(), c_.begin() + long(a));
    low_ += long(a);
  }
  // coarsen the grid while every exponent stays representable
  while (grid_ > 1) {
    bool ok = (low_ % 2 == 0);
    for (std::size_t i = 1; ok && i < c_.size(); i += 2)
      if (sgn(c_[i]) != 0) ok = false;
    if (!ok) break;
    std::vector<BigInt> n((c_.size() + 1) / 2);
    for (std::size_t i = 0; i < c_.size(); i += 2) n[i / 2].swap(c_[i]);
    c_.swap(n);
    low_ /= 2;
    grid_ /= 2;
  }
}

std::size_t LPoly::num_terms() const {
  return std::size_t(std::count_if(c_.begin(), c_.end(), [](const BigInt& x) { return sgn(x) != 0; }));
}

Rational LPoly::min_exponent() const {
  Rational r(low_, grid_);
  r.canonicalize();
  return r;
}

Rational LPoly::max_exponent() const {
  Rational r(high_scaled(), grid_);
  r.canonicalize();
  return r;
}

BigInt LPoly::coeff(const Rational& exp) const {
  Rational s = exp * grid_;
  s.canonicalize();
  if (s.get_den() != 1) return 0;
  long k = BigInt(s.get_num()).get_si() - low_;
  if (k < 0 || k >= long(c_.size())) return 0;
  return c_[std::size_t(k)];
}

std::map<long, BigInt> LPoly::terms() const {
  std::map<long, BigInt> m;
  for_each([&](long e, const BigInt& c) { m.emplace(e, c); });
  return m;
}

std::vector<BigInt> LPoly::dense_on(int g, long& low) const {
  int f = g / grid_;
  low = low_ * f;
  if (f == 1) return c_;
  std::vector<BigInt> out(c_.empty() ? 0 : (c_.size() - 1) * std::size_t(f) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * std::size_t(f)] = c_[i];
  return out;
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LPoly LPoly::combine(const LPoly& a, const LPoly& b, bool sub) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return sub ? -b : b;
  int g = lcm_grid(a.grid_, b.grid_);
  long la, lb;
  std::vector<BigInt> da = a.dense_on(g, la), db = b.dense_on(g, lb);
  long lo = std::min(la, lb);
  long hi = std::max(la + long(da.size()), lb + long(db.size()));
  std::vector<BigInt> out(std::size_t(hi - lo));
  for (std::size_t i = 0; i < da.size(); ++i) out[std::size_t(la - lo) + i].swap(da[i]);
  for (std::size_t i = 0; i < db.size(); ++i) {
    auto& t = out[std::size_t(lb - lo) + i];
    if (sub)
      t -= db[i];
    else
      t += db[i];
  }
  return LPoly(g, lo, std::move(out));
}

LPoly& LPoly::operator+=(const LPoly& o) {
  *this = combine(*this, o, false);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  *this = combine(*this, o, true);
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int g = lcm_grid(a.grid_, b.grid_);
  long la, lb;
  std::vector<BigInt> da = a.dense_on(g, la), db = b.dense_on(g, lb);
  std::vector<BigInt> out(da.size() + db.size() - 1);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (sgn(da[i]) == 0) continue;
    const mpz_srcptr x = da[i].get_mpz_t();
    for (std::size_t j = 0; j < db.size(); ++j)
      if (sgn(db[j]) != 0) mpz_addmul(out[i + j].get_mpz_t(), x, db[j].get_mpz_t());
  }
  return LPoly(g, la + lb, std::move(out));
}

LPoly& LPoly::operator*=(const LPoly& o) {
  *this = *this * o;
  return *this;
}

LPoly& LPoly::operator*=(const BigInt& s) {
  if (sgn(s) == 0) {
    *this = LPoly();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

bool operator==(const LPoly& a, const LPoly& b) {
  return a.grid_ == b.grid_ && a.low_ == b.low_ && a.c_ == b.c_;
}

LPoly LPoly::shifted(const Rational& e) const {
  if (is_zero()) return {};
  LPoly m = monomial(1, e);
  return *this * m;
}

LPoly LPoly::power_substituted(long k) const {
  if (k <= 0) throw Error(ErrorKind::BadParameter, "power_substituted needs k > 0");
  if (is_zero() || k == 1) return *this;
  std::vector<BigInt> out((c_.size() - 1) * std::size_t(k) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * std::size_t(k)] = c_[i];
  return LPoly(grid_, low_ * k, std::move(out));
}

BigInt LPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

int LPoly::sign_pattern() const {
  if (is_zero()) return 0;
  bool pos = false, neg = false;
  for (const auto& x : c_) {
    int s = sgn(x);
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos && neg) return 0;
  return pos ? 1 : -1;
}

bool LPoly::is_palindromic() const { return invert_q(*this) == *this; }

LPoly lp_arith(const LPoly& a, const LPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::scale:
      if (!b.is_zero() && (b.low_scaled() != 0 || b.high_scaled() != 0))
        throw Error(ErrorKind::BadParameter, "scale factor must be a constant");
      return a * b.coeff(0);
  }
  return {};
}

LPoly div_exact(const LPoly& a, const LPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  int g = lcm_grid(a.grid_, b.grid_);
  long la, lb;
  std::vector<BigInt> ra = a.dense_on(g, la), db = b.dense_on(g, lb);
  long qlo = la - lb;
  long qhi = la + long(ra.size()) - 1 - (lb + long(db.size()) - 1);
  if (qhi < qlo)
    throw Error(ErrorKind::NotDivisible, "degree span of divisor exceeds dividend (" + a.to_string() + " / " + b.to_string() + ")");
  std::vector<BigInt> q(std::size_t(qhi - qlo + 1));
  const BigInt& lead = db.back();
  BigInt t;
  for (long k = qhi; k >= qlo; --k) {
    std::size_t top = std::size_t(k - qlo) + db.size() - 1;
    BigInt& ca = ra[top];
    if (sgn(ca) == 0) continue;
    if (!mpz_divisible_p(ca.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, "leading coefficient does not divide exactly");
    mpz_divexact(t.get_mpz_t(), ca.get_mpz_t(), lead.get_mpz_t());
    std::size_t base = std::size_t(k - qlo);
    for (std::size_t j = 0; j < db.size(); ++j)
      if (sgn(db[j]) != 0) mpz_submul(ra[base + j].get_mpz_t(), t.get_mpz_t(), db[j].get_mpz_t());
    q[std::size_t(k - qlo)] = t;
  }
  for (const auto& x : ra)
    if (sgn(x) != 0) throw Error(ErrorKind::NotDivisible, "nonzero remainder");
  return LPoly(g, qlo, std::move(q));
}

LPoly invert_q(const LPoly& a) {
  if (a.is_zero()) return {};
  std::map<long, BigInt> m;
  a.for_each([&](long e, const BigInt& c) { m.emplace(-e, c); });
  return LPoly::from_terms(a.grid(), m);
}

std::string rational_to_string(const Rational& r) {
  Rational x = r;
  x.canonicalize();
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::BadParameter, "not a rational number: '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::BadParameter, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string superscript(const Rational& e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  auto put = [&](const BigInt& v) {
    for (char ch : v.get_str()) out += digits[ch - '0'];
  };
  Rational x = e;
  x.canonicalize();
  if (sgn(x) < 0) out += "⁻";
  put(abs(x.get_num()));
  if (x.get_den() != 1) {
    out += "ᐟ";
    put(x.get_den());
  }
  return out;
}

std::string LPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for_each([&](long e, const BigInt& c) {
    Rational ex(e, grid_);
    ex.canonicalize();
    BigInt mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (sgn(ex) == 0) {
      os << mag.get_str();
      return;
    }
    if (mag != 1) os << mag.get_str();
    os << var;
    if (ex != 1) os << superscript(ex);
  });
  return os.str();
}

}  // namespace fk
