#include "fk/surgery.hpp"

#include <numeric>
#include <sstream>

namespace fk {

namespace {

Rational frac(const Rational& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

// lowest exponent reachable from f_m: (m/2 - 1/(2r))^2 r/p - m^2/16
Rational growth_floor(const SurgerySlope& s, long m) {
  Rational u(m * s.r - 1, 2 * s.r);
  u.canonicalize();
  Rational e = u * u * Rational(s.r, s.p) - Rational(m * m, 16);
  e.canonicalize();
  return e;
}

}  // namespace

SurgerySlope parse_slope(const std::string& s, long b) {
  SurgerySlope out;
  Rational v;
  try {
    v = rational_from_string(s);
  } catch (const Error&) {
    throw Error(ErrorKind::BadParameter, "slope must look like -p/r, got '" + s + "'");
  }
  if (sgn(v) >= 0) throw Error(ErrorKind::BadParameter, "only negative slopes are supported, got " + s);
  v = -v;
  out.p = v.get_num().get_si();
  out.r = v.get_den().get_si();
  out.b = ((b % out.p) + out.p) % out.p;
  return out;
}

Rational guaranteed_exponent(const SurgerySlope& s, long m_max) {
  if (4 * s.r <= s.p)
    throw Error(ErrorKind::TruncationInsufficient, "slope -" + std::to_string(s.p) + "/" + std::to_string(s.r) +
                                                       " has no growth margin over the f_m degree bound");
  // the floor is a quadratic in m with positive leading coefficient
  long m0 = m_max + 2;
  if (m0 % 2 == 0) ++m0;
  Rational best = growth_floor(s, m0);
  for (long m = m0 + 2;; m += 2) {
    Rational g = growth_floor(s, m);
    if (g >= best) break;
    best = g;
  }
  return best;
}

std::map<long, BigInt> QSeries::primitive() const {
  std::map<long, BigInt> out;
  if (coeffs.empty() || sgn(content) == 0) return out;
  int s = sgn(coeffs.begin()->second) < 0 ? 1 : -1;
  for (const auto& [k, v] : coeffs) out[k] = s * v / content;
  return out;
}

std::string QSeries::to_string(long max_terms) const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (c > 0) os << "2^-" << c << " ";
  os << "q^(" << rational_to_string(delta_b) << ")(";
  long n = 0;
  bool first = true;
  for (const auto& [k, v] : coeffs) {
    if (n++ >= max_terms) break;
    BigInt mag = abs(v);
    os << (first ? (sgn(v) < 0 ? "-" : "") : (sgn(v) < 0 ? " - " : " + "));
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k != 0) os << "q" << (k == 1 ? "" : superscript(k));
  }
  os << " + O(q" << superscript(order + 1) << "))";
  return os.str();
}

QSeries laplace_zhat(const FkSeries& f, const SurgerySlope& slope, long q_max) {
  if (slope.p < 1 || slope.r < 1) throw Error(ErrorKind::BadParameter, "slope needs p, r >= 1");
  for (const auto& [m, poly] : f.fm)
    if (!poly.is_zero() && poly.min_exponent() < Rational(-m * m, 16))
      throw Error(ErrorKind::TruncationInsufficient,
                  "f_" + std::to_string(m) + " violates the degree bound mindeg >= -m^2/16");
  Rational bound = guaranteed_exponent(slope, f.m_max);
  const long p = slope.p, r = slope.r;
  std::map<Rational, Rational> acc;
  bool have_eps = false;
  Rational eps;
  for (const auto& [m, poly] : f.fm) {
    for (int sb : {1, -1})
      for (int sa : {1, -1}) {
        Rational u = Rational(sa * m, 2) + Rational(sb, 2 * r);
        u.canonicalize();
        Rational ru = u * r;
        Rational e = frac(ru);
        if (!have_eps) {
          eps = e;
          have_eps = true;
        }
        if (e != eps) throw Error(ErrorKind::GridViolation, "ru has inconsistent fractional parts");
        Rational sel = ru - eps - slope.b;
        sel.canonicalize();
        if (sel.get_den() != 1 || !mpz_divisible_ui_p(sel.get_num_mpz_t(), (unsigned long)p)) continue;
        Rational base = u * u * Rational(r, p);
        poly.for_each([&](long se, const BigInt& c) {
          Rational ex = base + Rational(se, poly.grid());
          ex.canonicalize();
          if (ex >= bound) return;
          acc[ex] += Rational(sa * sb * c, 2);
        });
      }
  }
  for (auto it = acc.begin(); it != acc.end();) {
    it->second.canonicalize();
    it = sgn(it->second) == 0 ? acc.erase(it) : std::next(it);
  }
  QSeries out;
  out.m_max_used = f.m_max;
  if (acc.empty())
    throw Error(ErrorKind::TruncationInsufficient,
                "no surviving monomial below q^" + rational_to_string(bound) + " with m_max = " + std::to_string(f.m_max));
  out.raw_min = acc.begin()->first;
  out.delta_b = out.raw_min - Rational(p * p + r * r, 4 * p * r);
  out.delta_b.canonicalize();
  Rational avail = bound - out.raw_min;
  if (Rational(q_max) >= avail)
    throw Error(ErrorKind::TruncationInsufficient,
                "q_max = " + std::to_string(q_max) + " but only offsets < " + rational_to_string(avail) +
                    " are final with m_max = " + std::to_string(f.m_max));
  out.order = q_max;
  // dyadic scale: smallest c with 2^c * coeff integral
  long c = 0;
  for (const auto& [ex, v] : acc) {
    Rational off = ex - out.raw_min;
    off.canonicalize();
    if (off > q_max) break;
    if (off.get_den() != 1) throw Error(ErrorKind::GridViolation, "non-integral q offset " + rational_to_string(off));
    const BigInt den = v.get_den();
    long vc = long(mpz_scan1(den.get_mpz_t(), 0));
    if (den != (BigInt(1) << vc)) throw Error(ErrorKind::GridViolation, "non-dyadic coefficient " + rational_to_string(v));
    c = std::max(c, vc);
  }
  out.c = c;
  BigInt scale = BigInt(1) << c;
  BigInt g = 0;
  for (const auto& [ex, v] : acc) {
    Rational off = ex - out.raw_min;
    if (off > q_max) break;
    Rational sv = v * Rational(scale);
    sv.canonicalize();
    out.coeffs[BigInt(off.get_num()).get_si()] = sv.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), sv.get_num_mpz_t());
  }
  out.content = g;
  if (sgn(out.coeffs.begin()->second) > 0) {
    out.sign = -1;
    for (auto& [k, v] : out.coeffs) v = -v;
  }
  return out;
}

}  // namespace fk
