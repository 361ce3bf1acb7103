#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fk/lpoly.hpp"

namespace fk {

struct KnotDescriptor {
  enum class Kind { figure_eight, cable };
  Kind kind = Kind::figure_eight;
  int p = 0;   // cable winding number
  long r = 0;  // cable framing parameter
  bool mirrored = false;

  static KnotDescriptor figure_eight() { return {}; }
  static KnotDescriptor cable(int p, long r) { return {Kind::cable, p, r, false}; }

  std::string name() const;
  friend bool operator==(const KnotDescriptor& a, const KnotDescriptor& b) {
    return a.kind == b.kind && a.p == b.p && a.r == b.r && a.mirrored == b.mirrored;
  }
};

// F_K(x,q) = 1/2 sum_{m odd} f_m(q) (x^{m/2} - x^{-m/2}) truncated at m_max.
// Absent keys are zero coefficients.
struct FkSeries {
  KnotDescriptor knot;
  long m_max = 1;
  std::map<long, LPoly> fm;

  // f_m for any integer m, with f_{-m} = -f_m and f_even = 0.
  LPoly at(long m) const;
  void set(long m, LPoly f);
  friend bool operator==(const FkSeries& a, const FkSeries& b) {
    return a.knot == b.knot && a.m_max == b.m_max && a.fm == b.fm;
  }
};

// Figure-eight coefficient functions h_1, h_3, ... computed lazily from the
// seven-term recursion. Thread-safe; entries are never invalidated.
class HTable {
 public:
  HTable();
  explicit HTable(long kmax);
  // seeds plus already-known entries, e.g. loaded from a cache
  explicit HTable(std::vector<LPoly> odd_entries);
  HTable(const HTable& o);
  HTable(HTable&& o) noexcept;
  HTable& operator=(const HTable&) = delete;

  const LPoly& h(long k);
  long kmax() const;
  void extend(long kmax);
  std::vector<LPoly> entries() const;

  static HTable& shared();

 private:
  void extend_locked(long kmax);
  mutable std::mutex mu_;
  std::deque<LPoly> h_;  // h_[i] = h_{2i+1}; deque keeps references stable
};

// The seven printed seeds h_1 ... h_13.
std::vector<LPoly> h_seeds();
HTable h_table(long kmax);

FkSeries mirror(const FkSeries& f);
std::map<long, BigInt> q1_limit(const FkSeries& f);
FkSeries figure_eight_series(long m_max, HTable& table = HTable::shared());

// "f⁺_13(q) = 2q⁶"
std::string format_coefficient(const std::string& name, long m, const LPoly& f);
std::string format_series(const FkSeries& f);

}  // namespace fk
