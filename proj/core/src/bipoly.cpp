#include "fk/bipoly.hpp"

#include <sstream>
#include <tuple>

namespace fk {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t((unsigned __int128)a * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

BiPoly::BiPoly(long c) {
  if (c != 0) t_.emplace(Key{0, 0}, BigInt(c));
}

BiPoly BiPoly::monomial(const BigInt& c, long tpow, long mpow) {
  BiPoly r;
  if (sgn(c) != 0) r.t_.emplace(Key{mpow, tpow}, c);
  return r;
}

BiPoly BiPoly::from_list(const std::vector<std::tuple<long, long, long>>& terms) {
  BiPoly r;
  for (const auto& [c, a, b] : terms) r.add_term(Key{b, a}, BigInt(c));
  return r;
}

void BiPoly::add_term(const Key& k, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

long BiPoly::min_m() const { return t_.empty() ? 0 : t_.begin()->first.first; }
long BiPoly::max_m() const { return t_.empty() ? 0 : t_.rbegin()->first.first; }

long BiPoly::min_t() const {
  long v = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (first || k.second < v) v = k.second;
    first = false;
  }
  return v;
}

long BiPoly::max_t() const {
  long v = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (first || k.second > v) v = k.second;
    first = false;
  }
  return v;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  std::map<BiPoly::Key, BigInt> acc;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      BigInt& slot = acc[BiPoly::Key{ka.first + kb.first, ka.second + kb.second}];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  BiPoly r;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) r.t_.emplace_hint(r.t_.end(), k, std::move(c));
  return r;
}

BiPoly BiPoly::subst_m(long ta, long mb) const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.add_term(Key{k.first * mb, k.second + ta * k.first}, c);
  return r;
}

LPoly BiPoly::eval_m_qpow(const Rational& mexp) const {
  std::map<long, BigInt> acc;
  for (const auto& [k, c] : t_) {
    Rational e = Rational(k.second, 4) + mexp * k.first;
    e.canonicalize();
    Rational s = e * 4;
    if (s.get_den() != 1) throw Error(ErrorKind::GridViolation, "M exponent leaves the q^(1/4) grid");
    acc[BigInt(s.get_num()).get_si()] += c;
  }
  return LPoly::from_terms(4, acc);
}

Rational BiPoly::eval(const Rational& t, const Rational& m) const {
  Rational acc = 0;
  for (const auto& [k, c] : t_) {
    Rational term(c);
    auto pw = [](const Rational& x, long e) {
      Rational r = 1;
      Rational b = e >= 0 ? x : Rational(1) / x;
      for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
      return r;
    };
    acc += term * pw(t, k.second) * pw(m, k.first);
  }
  acc.canonicalize();
  return acc;
}

std::vector<std::uint64_t> BiPoly::mod_image(std::uint64_t t0, std::uint64_t p) const {
  if (t_.empty()) return {};
  long lo = min_m();
  std::vector<std::uint64_t> out(std::size_t(max_m() - lo + 1), 0);
  BigInt pz(std::to_string(p));
  for (const auto& [k, c] : t_) {
    long a = k.second % long(p - 1);
    if (a < 0) a += long(p - 1);
    BigInt cm = c % pz;
    if (sgn(cm) < 0) cm += pz;
    std::uint64_t v = mulmod(std::uint64_t(cm.get_ui()), powmod(t0, std::uint64_t(a), p), p);
    auto& slot = out[std::size_t(k.first - lo)];
    slot = (slot + v) % p;
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [k, c] = *it;
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    BigInt mag = abs(c);
    bool bare = mag == 1 && (k.first != 0 || k.second != 0);
    if (!bare) os << mag.get_str();
    if (k.second != 0) os << "t^" << k.second;
    if (k.first != 0) os << (k.second != 0 ? "*" : "") << "M^" << k.first;
  }
  return os.str();
}

std::optional<BiPoly> bi_div_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "bivariate division by zero");
  if (a.is_zero()) return BiPoly();
  // the quotient's exponents are confined to this box
  const long mlo = a.min_m() - b.min_m(), mhi = a.max_m() - b.max_m();
  const long tlo = a.min_t() - b.min_t(), thi = a.max_t() - b.max_t();
  if (mhi < mlo || thi < tlo) return std::nullopt;
  BiPoly rem = a, q;
  const auto& [lk, lc] = *b.terms().rbegin();
  BigInt f;
  while (!rem.is_zero()) {
    const auto [rk, rc] = *rem.terms().rbegin();
    long me = rk.first - lk.first, te = rk.second - lk.second;
    if (me < mlo || me > mhi || te < tlo || te > thi) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(f.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    q.add_term({me, te}, f);
    for (const auto& [k, c] : b.terms()) rem.add_term({k.first + me, k.second + te}, -f * c);
  }
  return q;
}

}  // namespace fk
