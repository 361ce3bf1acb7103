#pragma once

#include <string>
#include <vector>

#include "fk/fk_series.hpp"

namespace fk {

// Arithmetic progression j -> (m_start + j m_step, h_{2j+1}, exp_start + j exp_step);
// element j contributes sign * 2 * h_{2j+1} q^{exp_start + j exp_step} to f_m.
struct Chain {
  long depth = 0;
  long m_start = 0;
  long m_step = 0;
  long exp_start = 0;
  long exp_step = 0;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.depth == b.depth && a.m_start == b.m_start && a.m_step == b.m_step && a.exp_start == b.exp_start &&
           a.exp_step == b.exp_step;
  }
};

struct ChainFamily {
  int sign = 1;
  int p = 2;
  long w = 0;
  std::vector<Chain> chains;
};

struct CableParams {
  int p;
  long w;
  long r() const { return p * w + 1; }
  long P() const { return p == 2 ? 2 * w + 1 : 3 * w + 1; }
  long n() const { return p == 2 ? w + 1 : 3 * w + 2; }
  long delta() const { return p == 2 ? 4 * w + 4 : 9 * w + 6; }
};

// Validates (p, w): p in {2,3}, w > 3.
CableParams cable_params(int p, long w);
// r = p w + 1 -> w; BadParameter if r is not of that form.
long w_from_r(int p, long r);

Chain chain_at(int p, long w, int sign, long depth);
// all chains whose first element lies at or below m_limit
ChainFamily chains(int p, long w, int sign, long m_limit);

// Symbolic form of f_m: sign * 2 * sum h_{index} q^{exp}.
struct HTerm {
  long h_index;
  long q_exp;
  friend bool operator==(const HTerm& a, const HTerm& b) { return a.h_index == b.h_index && a.q_exp == b.q_exp; }
};
struct HCombination {
  int sign = 0;  // 0 means f_m = 0
  std::vector<HTerm> terms;  // ordered by decreasing h index
  std::string to_string() const;
};

HCombination cable_pattern(int p, long w, long m);
LPoly evaluate(const HCombination& c, HTable& table = HTable::shared());

// Maximal depth d with a contribution at some m <= m_max.
long deepest_depth(int p, long w, long m_max);

FkSeries gen_cable(int p, long w, long m_max, HTable& table = HTable::shared());

}  // namespace fk
