#pragma once

#include <map>
#include <string>
#include <vector>

#include "fk/fk_series.hpp"
#include "fk/hbar.hpp"

namespace fk {

// Symmetrized Laurent polynomial in t (integer grid), Δ(t) = Δ(1/t), Δ(1) = 1.
using SymLaurent = LPoly;

// Antisymmetric series: coefficient of x^{m/2} for odd m > 0 (x^{-m/2} carries the negative).
struct XSeries {
  long m_max = 0;
  std::map<long, BigInt> coeffs;
  BigInt at(long m) const;
};

SymLaurent alexander_figure_eight();
SymLaurent alexander_torus(long p, long q);
// Δ_{4_1}(t^p) Δ_{T(p,r)}(t)
SymLaurent alexander_cable(int p, long r);

// Expansion at x = 0 of (x^{1/2} - x^{-1/2}) / Δ(x), which the expansion at
// infinity completes antisymmetrically.
XSeries symmetric_expansion(const SymLaurent& delta, long m_max);

// Colored Jones of the figure-eight, normalized (unknot = 1), in q.
LPoly colored_jones_figure_eight(long N);
// Unnormalized version [N] J_N in t = q^(1/4), with J~_{-N} = -J~_N.
LPoly colored_jones_figure_eight_unnormalized(long N);
// [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2})
LPoly quantum_integer(long n);
// Normalized colored Jones of the (r,p)-cable, as a Laurent polynomial in q on the q^(1/4) grid.
LPoly colored_jones_cable(int p, long r, long n);
LPoly colored_jones_cable_unnormalized(int p, long r, long n);

HbarSeries hbar_jones(int p, long r, int order);

struct MmrReport {
  struct Mismatch {
    long m;
    BigInt got;
    BigInt expected;
  };
  std::vector<Mismatch> r0_mismatches;
  long r0_compared = 0;
  struct Window {
    int r;
    long k_lo;
    long k_hi;
    long nonzero;  // coefficients in [k_lo, k_hi] that fail to vanish
  };
  std::vector<Window> windows;
  bool ok() const;
  std::string to_string() const;
};

// r = 0: f_m(1) = 2 E_m; r >= 1: the hbar^r part of F times Δ^{2r+1} is a Laurent
// polynomial, so its coefficients at x^{K/2} vanish for 2 deg Δ^{2r+1} < K <= m_max - 2 deg Δ^{2r+1}.
// Windows are empty unless m_max > 4 deg Δ^{2r+1}.
MmrReport mmr_check(const FkSeries& f, const SymLaurent& delta, int r_max);

}  // namespace fk
