#include "fk/alexjones.hpp"

#include <numeric>
#include <sstream>

namespace fk {

namespace {

LPoly mono(long c, long e, int grid = 1) { return LPoly::monomial(c, e, grid); }

}  // namespace

BigInt XSeries::at(long m) const {
  auto it = coeffs.find(m < 0 ? -m : m);
  if (it == coeffs.end()) return 0;
  return m < 0 ? BigInt(-it->second) : it->second;
}

SymLaurent alexander_figure_eight() { return mono(-1, 1) + mono(3, 0) + mono(-1, -1); }

SymLaurent alexander_torus(long p, long q) {
  p = std::labs(p);
  q = std::labs(q);
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error(ErrorKind::BadParameter, "torus knot needs coprime p, q >= 2");
  LPoly num = (mono(1, p * q) - mono(1, 0)) * (mono(1, 1) - mono(1, 0));
  LPoly den = (mono(1, p) - mono(1, 0)) * (mono(1, q) - mono(1, 0));
  LPoly d = div_exact(num, den);
  long deg = (p - 1) * (q - 1);
  return d.shifted(Rational(-deg, 2));
}

SymLaurent alexander_cable(int p, long r) {
  if (p < 2 || std::gcd(long(p), r) != 1 || std::labs(r) <= p)
    throw Error(ErrorKind::BadParameter, "cable needs p >= 2, |r| > p and gcd(p, r) = 1");
  LPoly d = alexander_figure_eight().power_substituted(p) * alexander_torus(p, r);
  if (d.grid() != 1) throw Error(ErrorKind::GridViolation, "Alexander polynomial has half-integer exponents");
  if (d.eval_at_one() != 1 || !d.is_palindromic())
    throw Error(ErrorKind::BadParameter, "Alexander polynomial failed normalization");
  return d;
}

XSeries symmetric_expansion(const SymLaurent& delta, long m_max) {
  if (delta.is_zero() || delta.grid() != 1) throw Error(ErrorKind::BadParameter, "Δ must be a nonzero Laurent polynomial");
  long d = -delta.low_scaled();
  if (delta.high_scaled() != d) throw Error(ErrorKind::BadParameter, "Δ is not symmetric");
  // P(x) = x^d Δ(x); (x^{1/2} - x^{-1/2}) / Δ = x^{d - 1/2} (x - 1) / P(x)
  std::vector<BigInt> P(std::size_t(2 * d + 1));
  delta.for_each([&](long e, const BigInt& c) { P[std::size_t(e + d)] = c; });
  if (abs(P[0]) != 1) throw Error(ErrorKind::NonUnitLeading, "Δ is not monic; expansion would leave Z");
  XSeries out;
  out.m_max = m_max;
  long lowest = 2 * d - 1;
  if (m_max < lowest) return out;
  std::size_t n = std::size_t((m_max - lowest) / 2 + 1);
  // series s = (x - 1) / P(x) = sum s_i x^i
  std::vector<BigInt> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt rhs = (i == 0 ? BigInt(-1) : i == 1 ? BigInt(1) : BigInt(0));
    for (std::size_t j = 1; j <= i && j < P.size(); ++j) rhs -= P[j] * s[i - j];
    s[i] = rhs * P[0];  // P[0] = ±1 is its own inverse
  }
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(s[i]) != 0) out.coeffs[lowest + 2 * long(i)] = s[i];
  return out;
}

LPoly colored_jones_figure_eight(long N) {
  N = std::labs(N);
  if (N == 0) return {};
  LPoly total, prod = 1;
  for (long k = 0; k < N; ++k) {
    if (k > 0) prod *= mono(1, N) + mono(1, -N) - mono(1, k) - mono(1, -k);
    total += prod;
  }
  return total;
}

LPoly quantum_integer(long n) {
  if (n == 0) return {};
  long a = std::labs(n);
  std::map<long, BigInt> m;
  for (long i = 0; i < a; ++i) m[2 * a - 2 - 4 * i] = n > 0 ? 1 : -1;
  return LPoly::from_terms(4, m);
}

LPoly colored_jones_figure_eight_unnormalized(long N) {
  if (N == 0) return {};
  return quantum_integer(N) * colored_jones_figure_eight(N);
}

LPoly colored_jones_cable_unnormalized(int p, long r, long n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "color n must be >= 1");
  if (p < 2 || std::gcd(long(p), r) != 1) throw Error(ErrorKind::BadParameter, "cable needs p >= 2 and gcd(p, r) = 1");
  LPoly tot;
  for (long k = -(n - 1); k <= n - 1; k += 2) {
    long e = r * k * (p * k + 2);  // t-exponent 4 r w (p w + 1) with k = 2w
    tot += colored_jones_figure_eight_unnormalized(p * k + 1) * mono(1, e, 4);
  }
  return tot * mono(1, -r * p * (n * n - 1), 4);
}

LPoly colored_jones_cable(int p, long r, long n) {
  return div_exact(colored_jones_cable_unnormalized(p, r, n), quantum_integer(n));
}

HbarSeries hbar_jones(int p, long r, int order) {
  if (order < 0) throw Error(ErrorKind::BadParameter, "order must be >= 0");
  std::vector<LPoly> J;
  for (long n = 1; n <= order + 2; ++n) J.push_back(colored_jones_cable(p, r, n));
  HbarSeries out(order);
  for (int k = 0; k <= order; ++k) {
    std::vector<std::pair<Rational, Rational>> samples;
    for (long n = 1; n <= order + 2; ++n) samples.emplace_back(Rational(n), hbar_coefficient(J[std::size_t(n - 1)], k));
    out[k] = interpolate_npoly(samples, k);
  }
  return out;
}

bool MmrReport::ok() const {
  if (!r0_mismatches.empty()) return false;
  for (const auto& w : windows)
    if (w.nonzero != 0 || w.k_hi < w.k_lo) return false;
  return true;
}

std::string MmrReport::to_string() const {
  std::ostringstream os;
  os << "r=0: " << r0_compared << " coefficients compared, " << r0_mismatches.size() << " mismatches";
  for (const auto& w : windows)
    os << "; r=" << w.r << ": window x^(K/2), K in [" << w.k_lo << ", " << w.k_hi << "], " << w.nonzero << " nonzero";
  return os.str();
}

MmrReport mmr_check(const FkSeries& f, const SymLaurent& delta, int r_max) {
  MmrReport rep;
  XSeries se = symmetric_expansion(delta, f.m_max);
  auto lim = q1_limit(f);
  for (long m = 1; m <= f.m_max; m += 2) {
    BigInt got = lim.count(m) ? lim[m] : BigInt(0);
    BigInt expected = 2 * se.at(m);
    ++rep.r0_compared;
    if (got != expected) rep.r0_mismatches.push_back({m, got, expected});
  }
  long d = delta.high_scaled();
  for (int r = 1; r <= r_max; ++r) {
    // C_r(x) = 1/2 sum_{m>0} [hbar^r] f_m(e^hbar) x^{m/2}, indices m
    std::map<long, Rational> C;
    for (const auto& [m, p] : f.fm) {
      Rational c = hbar_coefficient(p, r) / 2;
      if (sgn(c) != 0) C[m] = c;
    }
    LPoly dpow = 1;
    for (int i = 0; i < 2 * r + 1; ++i) dpow *= delta;
    long D = long(2 * r + 1) * d;
    long k_hi = f.m_max - 2 * D;
    long k_lo = 2 * D + 1;
    MmrReport::Window w{r, k_lo, k_hi, 0};
    for (long K = k_lo; K <= k_hi; K += 2) {
      Rational s = 0;
      dpow.for_each([&](long j, const BigInt& c) {
        auto it = C.find(K - 2 * j);
        if (it != C.end()) s += it->second * c;
      });
      if (sgn(s) != 0) ++w.nonzero;
    }
    rep.windows.push_back(w);
  }
  return rep;
}

}  // namespace fk
