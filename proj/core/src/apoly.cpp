#include "fk/apoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fk {

namespace {

const BiPoly& zero_bipoly() {
  static const BiPoly z;
  return z;
}

BiPoly T(const std::vector<std::tuple<long, long, long>>& terms) { return BiPoly::from_list(terms); }

// P(t, t^a M^2)
BiPoly at(const BiPoly& p, long a) { return p.subst_m(a, 2); }

BiPoly p1_inner(OperatorVariant v) {
  if (v == OperatorVariant::as_printed)
    return T({{1, 0, 0}, {-1, 4, 2}, {-1, 4, 4}, {-1, 12, 4}, {-1, 12, 4}, {-1, 12, 6}, {1, 16, 8}});
  return T({{1, 0, 0}, {-1, 4, 2}, {-1, 4, 4}, {-1, 12, 4}, {-1, 12, 6}, {1, 16, 8}});
}

constexpr std::uint64_t kPrime = 1000003;
constexpr std::uint64_t kT0 = 12345;

using Uni = std::vector<std::uint64_t>;

void trim(Uni& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a) {
  std::uint64_t r = 1, e = kPrime - 2;
  a %= kPrime;
  while (e) {
    if (e & 1) r = r * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return r;
}

Uni rem_mod(Uni a, Uni b) {
  trim(a);
  trim(b);
  if (b.empty()) return a;
  std::uint64_t inv = inv_mod(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t f = a.back() * inv % kPrime;
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + sh] = (a[i + sh] + kPrime - f * b[i] % kPrime) % kPrime;
    a.pop_back();
    trim(a);
  }
  return a;
}

Uni gcd_mod(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Uni r = rem_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<BiPoly> content_candidates() {
  std::vector<BiPoly> out;
  for (long mb : {1L, 2L, 4L})
    for (long a = -60; a <= 60; ++a)
      for (long s : {1L, -1L}) out.push_back(T({{1, 0, 0}, {s, a, mb}}));
  BiPoly inner = p1_inner(OperatorVariant::corrected);
  for (long k = -16; k <= 16; ++k) out.push_back(at(inner, k));
  return out;
}

}  // namespace

const BiPoly& NCOperator::coeff(long k) const {
  auto it = terms.find(k);
  return it == terms.end() ? zero_bipoly() : it->second;
}

NCOperator nc_mul(const NCOperator& a, const NCOperator& b) {
  NCOperator r;
  for (const auto& [ka, pa] : a.terms)
    for (const auto& [kb, pb] : b.terms) r.terms[ka + kb] += pa * pb.subst_m(2 * ka, 1);
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
  return r;
}

NCOperator nc_add(const NCOperator& a, const NCOperator& b) {
  NCOperator r = a;
  for (const auto& [k, p] : b.terms) r.terms[k] += p;
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
  return r;
}

NCOperator nc_from(const BiPoly& c, long lpow) {
  NCOperator r;
  if (!c.is_zero()) r.terms[lpow] = c;
  return r;
}

BiPoly apply_to_monomial(const NCOperator& op, long s) {
  BiPoly acc;
  for (const auto& [k, c] : op.terms) acc += c * BiPoly::monomial(1, 4 * k * s, 2 * s);
  return acc;
}

FigureEightOperators figure_eight_operators(OperatorVariant variant) {
  FigureEightOperators o;
  o.P0 = T({{-1, 6, 4}, {1, 18, 8}});
  o.P2 = T({{-1, 10, 4}, {1, 14, 8}});
  o.P1 = T({{-1, 0, 0}}) * T({{-1, 0, 0}, {1, 4, 2}}) * T({{1, 0, 0}, {1, 4, 2}}) * p1_inner(variant);
  if (variant == OperatorVariant::as_printed)
    o.Q2 = at(o.P2, 4) * at(o.P1, 2) * at(o.P0, 6);
  else
    o.Q2 = at(o.P2, 4) * at(o.P1, 2) * at(o.P2, 6);
  o.Q1 = at(o.P0, 4) * at(o.P1, 6) * at(o.P2, 2) - at(o.P1, 6) * at(o.P1, 2) * at(o.P1, 4) +
         at(o.P2, 4) * at(o.P1, 2) * at(o.P0, 6);
  o.Q0 = at(o.P0, 4) * at(o.P1, 6) * at(o.P0, 2);
  o.b = T({{1, 0, 1}}) * T({{1, 0, 0}, {1, 4, 2}}) * T({{-1, 0, 0}, {1, 4, 4}}) * T({{-1, 2, 0}, {1, 14, 4}});
  o.c0 = at(o.P0, 4) * at(o.P1, 6);
  o.c1 = -(at(o.P1, 2) * at(o.P1, 6));
  o.c2 = at(o.P1, 2) * at(o.P2, 4);
  o.B = o.c0 * at(o.b, 2) + o.c1 * at(o.b, 4) + o.c2 * at(o.b, 6);
  return o;
}

NCOperator build_ahat2(long r, OperatorVariant variant) {
  if (r % 2 == 0) throw Error(ErrorKind::BadParameter, "r must be odd, got " + std::to_string(r));
  if (r >= -8 && r <= 8) throw Error(ErrorKind::BadParameter, "|r| must exceed 8, got " + std::to_string(r));
  FigureEightOperators o = figure_eight_operators(variant);
  NCOperator Q;
  Q.terms[0] = o.Q0;
  Q.terms[1] = o.Q1;
  Q.terms[2] = o.Q2;
  NCOperator right;
  right.terms[1] = BiPoly::monomial(1, 0, r);
  right.terms[0] = BiPoly::monomial(1, -2 * r, -r);
  NCOperator left;
  left.terms[1] = o.B;
  left.terms[0] = -o.B.subst_m(2, 1);
  return nc_mul(nc_mul(left, Q), right);
}

ContentReduction reduce_content(const NCOperator& op) {
  ContentReduction out;
  out.reduced = op;
  const auto cands = content_candidates();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const BiPoly& c : cands) {
      Uni cu = c.mod_image(kT0, kPrime);
      bool maybe = true;
      for (const auto& [k, p] : out.reduced.terms)
        if (!rem_mod(p.mod_image(kT0, kPrime), cu).empty()) {
          maybe = false;
          break;
        }
      if (!maybe) continue;
      NCOperator q;
      bool ok = true;
      for (const auto& [k, p] : out.reduced.terms) {
        auto d = bi_div_exact(p, c);
        if (!d) {
          ok = false;
          break;
        }
        q.terms[k] = std::move(*d);
      }
      if (!ok) continue;
      out.reduced = std::move(q);
      out.removed.push_back(c);
      out.removed_m_degree += c.max_m() - c.min_m();
      changed = true;
    }
  }
  Uni g;
  for (const auto& [k, p] : out.reduced.terms) g = gcd_mod(g, p.mod_image(kT0, kPrime));
  out.residual_gcd_degree = g.empty() ? 0 : long(g.size()) - 1;
  return out;
}

LPoly RecursionTerm::eval(long v) const {
  LPoly acc;
  for (const auto& [k, c] : by_k) acc += c.shifted(Rational(k * v, 2));
  return acc;
}

std::vector<long> MRecursion::offsets() const {
  std::vector<long> o;
  for (const auto& t : terms) o.push_back(t.offset);
  return o;
}

LeadingForm MRecursion::leading_form() const {
  LeadingForm f;
  const auto& lk = leading().by_k;
  if (lk.size() != 2) return f;
  auto it = lk.begin();
  long k1 = it->first;
  const LPoly& a = it->second;
  ++it;
  long k2 = it->first;
  const LPoly& b = it->second;
  if (k2 - k1 != 1 || a.num_terms() != 1 || b.num_terms() != 1) return f;
  BigInt ca = a.coeff(a.min_exponent()), cb = b.coeff(b.min_exponent());
  if (cb != -ca) return f;
  f.binomial = true;
  f.coeff = ca;
  f.k = k1;
  f.alpha = a.min_exponent() * 2;
  f.beta = (b.min_exponent() - a.min_exponent()) * 2;
  return f;
}

std::string LeadingForm::to_string() const {
  if (!binomial) return "(not a binomial)";
  std::ostringstream os;
  os << (coeff == 1 ? "" : coeff == -1 ? "-" : coeff.get_str()) << "q^((" << rational_to_string(alpha) << " + "
     << (k == 1 ? "" : std::to_string(k)) << "v)/2)(1 - q^((" << rational_to_string(beta) << " + v)/2))";
  return os.str();
}

MRecursion m_recursion(const NCOperator& op, long r) {
  if (op.terms.empty()) throw Error(ErrorKind::NonSolvableLeading, "empty operator");
  ContentReduction red = reduce_content(op);
  const NCOperator& P = red.reduced;
  long bmin = 0, bmax = 0;
  bool first = true;
  for (const auto& [k, c] : P.terms) {
    if (first) {
      bmin = c.min_m();
      bmax = c.max_m();
      first = false;
    }
    bmin = std::min(bmin, c.min_m());
    bmax = std::max(bmax, c.max_m());
  }
  // coefficient of M^N: sum c t^{a + 2k(N-b)} f_{N-b}; with v = N - bmax, s = bmax - b
  std::map<long, std::map<long, std::map<long, BigInt>>> acc;  // s -> k -> t-exponent -> coeff
  for (const auto& [k, c] : P.terms)
    for (const auto& [key, val] : c.terms()) {
      long b = key.first, a = key.second;
      long s = bmax - b;
      if (a % 2 != 0)
        throw Error(ErrorKind::GridViolation, "term t^" + std::to_string(a) + " M^" + std::to_string(b) + " L^" +
                                                  std::to_string(k) + " leaves the q^(1/2) grid");
      acc[s][k][a + 2 * k * s] += val;
    }
  MRecursion rec;
  rec.r = r;
  rec.span = bmax - bmin;
  rec.window = rec.span - 1;
  rec.removed_m_degree = red.removed_m_degree;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    RecursionTerm t;
    t.offset = it->first;
    for (const auto& [k, m] : it->second) {
      LPoly p = LPoly::from_terms(4, m);
      if (!p.is_zero()) t.by_k.emplace(k, std::move(p));
    }
    if (!t.is_zero()) rec.terms.push_back(std::move(t));
  }
  if (rec.terms.empty() || rec.terms.front().offset != rec.span)
    throw Error(ErrorKind::NonSolvableLeading, "leading template vanishes identically");
  return rec;
}

MRecursion m_recursion_for(long r, OperatorVariant variant) { return m_recursion(build_ahat2(r, variant), r); }

LPoly relation_residual(const MRecursion& rec, const FkSeries& f, long v) {
  LPoly acc;
  for (const auto& t : rec.terms) {
    LPoly fv = f.at(v + t.offset);
    if (fv.is_zero()) continue;
    acc += t.eval(v) * fv;
  }
  return acc;
}

FkSeries solve_forward(const MRecursion& rec, const FkSeries& initial, long m_max) {
  FkSeries out;
  out.knot = initial.knot;
  out.m_max = m_max;
  for (const auto& [m, p] : initial.fm)
    if (m <= rec.window) out.fm[m] = p;
  for (long m = rec.window + 1; m <= m_max; ++m) {
    if (m % 2 == 0) continue;
    long v = m - rec.span;
    LPoly rhs;
    for (std::size_t i = 1; i < rec.terms.size(); ++i) {
      const auto& t = rec.terms[i];
      LPoly fv = out.at(v + t.offset);
      if (!fv.is_zero()) rhs += t.eval(v) * fv;
    }
    LPoly lead = rec.leading().eval(v);
    if (lead.is_zero())
      throw Error(ErrorKind::NonSolvableLeading, "leading coefficient vanishes at v = " + std::to_string(v));
    LPoly fm;
    try {
      fm = div_exact(-rhs, lead);
    } catch (const Error& e) {
      throw Error(ErrorKind::NotDivisible, "solving for f_" + std::to_string(m) + ": " + e.what());
    }
    out.set(m, std::move(fm));
  }
  return out;
}

AnnihilationReport verify_annihilation(const MRecursion& rec, const FkSeries& f) {
  AnnihilationReport rep;
  if (f.fm.empty()) return rep;
  bool any = false;
  for (long v = -f.m_max; v + rec.span <= f.m_max; ++v) {
    bool odd = false;
    for (const auto& t : rec.terms) odd |= ((v + t.offset) % 2 != 0);
    if (!odd) continue;
    ++rep.instances;
    rep.largest_v = any ? std::max(rep.largest_v, v) : v;
    any = true;
    LPoly res = relation_residual(rec, f, v);
    if (!res.is_zero()) rep.entries.push_back({v, std::move(res)});
  }
  return rep;
}

}  // namespace fk
