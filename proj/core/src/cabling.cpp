#include "fk/cabling.hpp"

#include <algorithm>
#include <sstream>

namespace fk {

CableParams cable_params(int p, long w) {
  if (p != 2 && p != 3) throw Error(ErrorKind::BadParameter, "cable winding p must be 2 or 3, got " + std::to_string(p));
  if (w <= 3) throw Error(ErrorKind::UnsupportedW, "w must exceed 3, got " + std::to_string(w));
  return {p, w};
}

long w_from_r(int p, long r) {
  if (p != 2 && p != 3) throw Error(ErrorKind::BadParameter, "cable winding p must be 2 or 3, got " + std::to_string(p));
  if ((r - 1) % p != 0)
    throw Error(ErrorKind::BadParameter, "r = " + std::to_string(r) + " is not of the form " + std::to_string(p) + "w+1");
  return (r - 1) / p;
}

Chain chain_at(int p, long w, int sign, long d) {
  CableParams c = cable_params(p, w);
  const long P = c.P(), n = c.n(), D = c.delta();
  Chain ch;
  ch.depth = d;
  if (p == 2) {
    ch.m_step = 4;
    if (sign > 0) {
      ch.m_start = 2 * w + 3 + 4 * P * d;
      ch.exp_start = n + P * (2 * d * d - d) + d * D;
      ch.exp_step = 4 * d + 1;
    } else {
      ch.m_start = 6 * w + 5 + 4 * P * d;
      ch.exp_start = 3 * n + P * (2 * d * d + d) + d * D;
      ch.exp_step = 4 * d + 3;
    }
  } else {
    ch.m_step = 6;
    if (sign > 0) {
      ch.m_start = 6 * w + 5 + 6 * P * d;
      ch.exp_start = n + P * (3 * d * d - d) + d * D;
      ch.exp_step = 6 * d + 2;
    } else {
      ch.m_start = 12 * w + 7 + 6 * P * d;
      ch.exp_start = 2 * n + P * (3 * d * d + d) + d * D;
      ch.exp_step = 6 * d + 4;
    }
  }
  return ch;
}

ChainFamily chains(int p, long w, int sign, long m_limit) {
  ChainFamily fam{sign > 0 ? 1 : -1, p, w, {}};
  for (long d = 0;; ++d) {
    Chain ch = chain_at(p, w, fam.sign, d);
    if (ch.m_start > m_limit) break;
    fam.chains.push_back(ch);
  }
  return fam;
}

HCombination cable_pattern(int p, long w, long m) {
  HCombination out;
  for (int sign : {1, -1}) {
    for (const Chain& ch : chains(p, w, sign, m).chains) {
      if ((m - ch.m_start) % ch.m_step != 0) continue;
      long j = (m - ch.m_start) / ch.m_step;
      if (out.sign != 0 && out.sign != sign)
        throw Error(ErrorKind::BadParameter, "positive and negative chains collide at m = " + std::to_string(m));
      out.sign = sign;
      out.terms.push_back({2 * j + 1, ch.exp_start + j * ch.exp_step});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const HTerm& a, const HTerm& b) { return a.h_index > b.h_index; });
  return out;
}

std::string HCombination::to_string() const {
  if (sign == 0) return "0";
  std::ostringstream os;
  os << (sign < 0 ? "-2" : "2");
  if (terms.size() > 1) os << "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << (terms.size() == 1 ? " " : "") << "h_" << terms[i].h_index;
    if (terms[i].q_exp != 0) os << " q" << (terms[i].q_exp == 1 ? "" : superscript(terms[i].q_exp));
  }
  if (terms.size() > 1) os << ")";
  return os.str();
}

LPoly evaluate(const HCombination& c, HTable& table) {
  LPoly acc;
  for (const auto& t : c.terms) acc += table.h(t.h_index).shifted(t.q_exp);
  return acc * BigInt(2 * c.sign);
}

long deepest_depth(int p, long w, long m_max) {
  long d = -1;
  for (int sign : {1, -1}) {
    auto fam = chains(p, w, sign, m_max);
    if (!fam.chains.empty()) d = std::max(d, fam.chains.back().depth);
  }
  return d;
}

FkSeries gen_cable(int p, long w, long m_max, HTable& table) {
  CableParams c = cable_params(p, w);
  if (m_max < 1) throw Error(ErrorKind::BadParameter, "m_max must be >= 1");
  FkSeries f;
  f.knot = KnotDescriptor::cable(p, c.r());
  f.m_max = m_max % 2 == 0 ? m_max - 1 : m_max;
  std::map<long, int> owner;
  for (int sign : {1, -1}) {
    for (const Chain& ch : chains(p, w, sign, m_max).chains) {
      for (long j = 0, m = ch.m_start; m <= m_max; ++j, m += ch.m_step) {
        auto [it, fresh] = owner.emplace(m, sign);
        if (!fresh && it->second != sign)
          throw Error(ErrorKind::BadParameter, "sign families collide at m = " + std::to_string(m));
        LPoly term = table.h(2 * j + 1).shifted(ch.exp_start + j * ch.exp_step) * BigInt(2 * sign);
        f.fm[m] += term;
      }
    }
  }
  return f;
}

}  // namespace fk
