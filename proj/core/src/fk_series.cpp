#include "fk/fk_series.hpp"

#include <sstream>
#include <utility>

namespace fk {

namespace {

LPoly from_list(const std::vector<std::pair<long, long>>& cs) {
  std::map<long, BigInt> m;
  for (auto [c, e] : cs) m[e] += c;
  return LPoly::from_terms(1, m);
}

// sum of c * q^(e2/2)
LPoly halves(const std::vector<std::pair<long, long>>& cs) {
  std::map<long, BigInt> m;
  for (auto [c, e2] : cs) m[e2] += c;
  return LPoly::from_terms(2, m);
}

}  // namespace

std::string KnotDescriptor::name() const {
  std::string base = kind == Kind::figure_eight ? "4_1" : "C(" + std::to_string(r) + "," + std::to_string(p) + ")(4_1)";
  return mirrored ? "m(" + base + ")" : base;
}

LPoly FkSeries::at(long m) const {
  if (m % 2 == 0) return {};
  auto it = fm.find(m < 0 ? -m : m);
  if (it == fm.end()) return {};
  return m < 0 ? -it->second : it->second;
}

void FkSeries::set(long m, LPoly f) {
  if (m <= 0 || m % 2 == 0) throw Error(ErrorKind::BadParameter, "coefficient index must be odd and positive");
  if (f.is_zero())
    fm.erase(m);
  else
    fm[m] = std::move(f);
}

std::vector<LPoly> h_seeds() {
  return {
      from_list({{1, 0}}),
      from_list({{2, 0}}),
      from_list({{1, -1}, {3, 0}, {1, 1}}),
      from_list({{2, -2}, {2, -1}, {5, 0}, {2, 1}, {2, 2}}),
      from_list({{1, -4}, {3, -3}, {4, -2}, {5, -1}, {8, 0}, {5, 1}, {4, 2}, {3, 3}, {1, 4}}),
      from_list({{2, -6}, {2, -5}, {6, -4}, {7, -3}, {10, -2}, {10, -1}, {15, 0},
                 {10, 1}, {10, 2}, {7, 3}, {6, 4}, {2, 5}, {2, 6}}),
      from_list({{1, -9}, {3, -8}, {4, -7}, {7, -6}, {11, -5}, {15, -4}, {18, -3}, {21, -2}, {23, -1}, {27, 0},
                 {23, 1}, {21, 2}, {18, 3}, {15, 4}, {11, 5}, {7, 6}, {4, 7}, {3, 8}, {1, 9}}),
  };
}

HTable::HTable() {
  for (auto& s : h_seeds()) h_.push_back(std::move(s));
}

HTable::HTable(long kmax) : HTable() { extend(kmax); }

HTable::HTable(std::vector<LPoly> odd_entries) : h_(odd_entries.begin(), odd_entries.end()) {
  auto seeds = h_seeds();
  if (h_.size() < seeds.size()) h_.assign(seeds.begin(), seeds.end());
  for (std::size_t i = 0; i < seeds.size(); ++i)
    if (h_[i] != seeds[i]) throw Error(ErrorKind::BadParameter, "h-table entries disagree with the seeds");
}

HTable::HTable(const HTable& o) {
  std::lock_guard<std::mutex> lk(o.mu_);
  h_ = o.h_;
}

HTable::HTable(HTable&& o) noexcept {
  std::lock_guard<std::mutex> lk(o.mu_);
  h_ = std::move(o.h_);
}

long HTable::kmax() const {
  std::lock_guard<std::mutex> lk(mu_);
  return 2 * long(h_.size()) - 1;
}

std::vector<LPoly> HTable::entries() const {
  std::lock_guard<std::mutex> lk(mu_);
  return {h_.begin(), h_.end()};
}

const LPoly& HTable::h(long k) {
  if (k < 1 || k % 2 == 0) throw Error(ErrorKind::BadParameter, "h_k needs odd k >= 1, got " + std::to_string(k));
  std::lock_guard<std::mutex> lk(mu_);
  extend_locked(k);
  return h_[std::size_t((k - 1) / 2)];
}

void HTable::extend(long kmax) {
  std::lock_guard<std::mutex> lk(mu_);
  extend_locked(kmax);
}

void HTable::extend_locked(long kmax) {
  while (2 * long(h_.size()) - 1 < kmax) {
    long m = 2 * long(h_.size()) - 13;  // next entry is h_{m+14}
    // bracket polynomials with exponents doubled
    std::vector<LPoly> c = {
        halves({{1, m + 17}, {-1, 2 * m + 18}}),
        halves({{1, m + 15}, {-1, m + 17}, {1, 2 * m + 18}, {-1, 2 * m + 20}}),
        halves({{-1, m + 11}, {-1, m + 17}, {-1, m + 19}, {1, 3 * m + 21}, {1, 2 * m + 16}, {1, 2 * m + 18},
                {1, 2 * m + 24}, {-1, 14}}),
        halves({{-1, m + 9}, {1, m + 11}, {-1, m + 15}, {-1, m + 17}, {1, 3 * m + 25}, {1, 2 * m + 18},
                {1, 2 * m + 20}, {-1, 2 * m + 24}, {1, 2 * m + 26}, {-1, 10}}),
        halves({{1, m + 11}, {1, m + 13}, {-1, m + 17}, {1, m + 19}, {-1, 3 * m + 31}, {-1, 2 * m + 16},
                {1, 2 * m + 18}, {-1, 2 * m + 22}, {-1, 2 * m + 24}, {1, 4}}),
        halves({{1, m + 9}, {1, m + 11}, {1, m + 17}, {-1, 3 * m + 35}, {-1, 2 * m + 18}, {-1, 2 * m + 24},
                {-1, 2 * m + 26}, {1, 0}}),
        halves({{1, m + 11}, {-1, m + 13}, {1, 2 * m + 22}, {-1, 2 * m + 24}}),
    };
    LPoly s;
    for (std::size_t i = 0; i < 7; ++i) s += h_[std::size_t((m - 1) / 2) + i] * c[i];
    s = s * halves({{-1, -(m + 11)}});
    LPoly den = halves({{1, m + 13}, {-1, 0}});
    LPoly next = div_exact(s, den);
    if (!next.is_palindromic())
      throw Error(ErrorKind::NotDivisible, "h_" + std::to_string(m + 14) + " is not palindromic");
    h_.push_back(std::move(next));
  }
}

HTable& HTable::shared() {
  static HTable table;
  return table;
}

HTable h_table(long kmax) {
  if (kmax < 1) throw Error(ErrorKind::BadParameter, "kmax must be >= 1");
  HTable t;
  t.extend(kmax);
  return t;
}

FkSeries mirror(const FkSeries& f) {
  FkSeries r = f;
  r.knot.mirrored = !f.knot.mirrored;
  for (auto& [m, p] : r.fm) p = invert_q(p);
  return r;
}

std::map<long, BigInt> q1_limit(const FkSeries& f) {
  std::map<long, BigInt> out;
  for (const auto& [m, p] : f.fm) out.emplace(m, p.eval_at_one());
  return out;
}

FkSeries figure_eight_series(long m_max, HTable& table) {
  FkSeries f;
  f.knot = KnotDescriptor::figure_eight();
  f.m_max = m_max;
  for (long m = 1; m <= m_max; m += 2) f.set(m, table.h(m));
  return f;
}

std::string format_coefficient(const std::string& name, long m, const LPoly& f) {
  std::string sign;
  int s = f.sign_pattern();
  if (s > 0) sign = "⁺";
  if (s < 0) sign = "⁻";
  std::ostringstream os;
  os << name << sign << "_" << m << "(q) = " << f.to_string();
  return os.str();
}

std::string format_series(const FkSeries& f) {
  std::ostringstream os;
  os << "# F_K for " << f.knot.name() << ", m <= " << f.m_max << "\n";
  for (const auto& [m, p] : f.fm) os << format_coefficient("f", m, p) << "\n";
  return os.str();
}

}  // namespace fk
