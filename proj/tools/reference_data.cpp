#include "reference_data.hpp"

#include <algorithm>

namespace fk::ref {

std::vector<CableFixture> cable_fixtures() {
  return {
      {2, 11, "C(11,2) initial data, f_103, f_105 and the further pair",
       {
           {13, 1, {{1, 6}}},
           {17, 1, {{3, 7}}},
           {21, 1, {{5, 8}}},
           {57, 1, {{23, 17}, {1, 41}}},
           {61, 1, {{25, 18}, {3, 46}}},
           {65, 1, {{27, 19}, {5, 51}}},
           {101, 1, {{45, 28}, {23, 96}, {1, 120}}},
           {35, -1, {{1, 18}}},
           {39, -1, {{3, 21}}},
           {43, -1, {{5, 24}}},
           {79, -1, {{23, 51}, {1, 75}}},
           {83, -1, {{25, 54}, {3, 82}}},
           {99, -1, {{33, 66}, {11, 110}}},
           {103, -1, {{35, 69}, {13, 117}}},
           {105, 1, {{47, 29}, {25, 101}, {3, 129}}},
           {107, -1, {{37, 72}, {15, 124}}},
           {109, 1, {{49, 30}, {27, 106}, {5, 138}}},
       }},
      {2, 13, "C(13,2) initial data, f_107, f_109 and the further pair",
       {
           {15, 1, {{1, 7}}},
           {19, 1, {{3, 8}}},
           {23, 1, {{5, 9}}},
           {67, 1, {{27, 20}, {1, 48}}},
           {71, 1, {{29, 21}, {3, 53}}},
           {41, -1, {{1, 21}}},
           {45, -1, {{3, 24}}},
           {49, -1, {{5, 27}}},
           {93, -1, {{27, 60}, {1, 88}}},
           {97, -1, {{29, 63}, {3, 95}}},
           {105, -1, {{33, 69}, {7, 109}}},
           {107, 1, {{47, 30}, {21, 98}}},
           {109, -1, {{35, 72}, {9, 116}}},
           {111, 1, {{49, 31}, {23, 103}}},
           {113, -1, {{37, 75}, {11, 123}}},
       }},
      {3, 13, "C(13,3) extrapolations f_355 ... f_361",
       {
           {355, -1, {{101, 228}, {75, 492}, {49, 678}, {23, 786}}},
           {357, 0, {}},
           {359, 1, {{111, 124}, {85, 418}, {59, 634}, {33, 772}, {7, 832}}},
           {361, -1, {{103, 232}, {77, 502}, {51, 694}, {25, 808}}},
       }},
  };
}

std::vector<SymRow> pattern_rows(int p) {
  if (p == 2)
    return {
        {2, 1, 2, 3, {{0, 1, 1, 0, 0, 0}}, "", 0},
        {2, 1, 2, 7, {{0, 3, 1, 0, 1, 0}}, "", 0},
        {2, 1, 2, 11, {{0, 5, 1, 0, 2, 0}}, "", 0},
        {2, 1, 10, 7, {{4, 3, 1, 2, 1, 0}, {0, 1, 1, 2, 1, 1}}, "", 0},
        {2, 1, 10, 11, {{4, 5, 1, 2, 2, 0}, {0, 3, 1, 2, 6, 1}}, "", 0},
        {2, 1, 10, 15, {{4, 7, 1, 2, 3, 0}, {0, 5, 1, 2, 11, 1}}, "", 0},
        {2, 1, 18, 11, {{8, 5, 1, 4, 2, 0}, {4, 3, 1, 12, 6, 1}, {0, 1, 1, 12, 6, 2}}, "", 0},
        {2, 1, 18, 15, {{8, 7, 1, 4, 3, 0}, {4, 5, 1, 12, 11, 1}, {0, 3, 1, 12, 15, 2}}, "", 0},
        {2, -1, 6, 5, {{0, 1, 3, 0, 0, 0}}, "", 0},
        {2, -1, 6, 9, {{0, 3, 3, 0, 3, 0}}, "", 0},
        {2, -1, 6, 13, {{0, 5, 3, 0, 6, 0}}, "", 0},
        {2, -1, 14, 9, {{4, 3, 3, 6, 3, 0}, {0, 1, 3, 6, 3, 1}}, "", 0},
        {2, -1, 14, 13, {{4, 5, 3, 6, 6, 0}, {0, 3, 3, 6, 10, 1}}, "", 0},
    };
  return {
      {3, 1, 6, 5, {{0, 1, 1, 0, 0, 0}}, "", 0},
      {3, 1, 6, 11, {{0, 3, 1, 0, 2, 0}}, "", 0},
      {3, 1, 6, 17, {{0, 5, 1, 0, 4, 0}}, "", 0},
      {3, 1, 24, 11, {{6, 3, 1, 6, 2, 0}, {0, 1, 1, 6, 2, 1}}, "", 0},
      {3, 1, 24, 17, {{6, 5, 1, 6, 4, 0}, {0, 3, 1, 6, 10, 1}}, "", 0},
      {3, 1, 24, 23, {{6, 7, 1, 6, 6, 0}, {0, 5, 1, 6, 18, 1}}, "", 0},
      {3, 1, 42, 17, {{12, 5, 1, 12, 4, 0}, {6, 3, 1, 30, 10, 1}, {0, 1, 1, 30, 10, 2}}, "", 0},
      {3, 1, 42, 23, {{12, 7, 1, 12, 6, 0}, {6, 5, 1, 30, 18, 1}, {0, 3, 1, 30, 24, 2}}, "", 0},
      {3, 1, 60, 23, {{18, 7, 1, 18, 6, 0}, {12, 5, 1, 54, 18, 1}, {6, 3, 1, 72, 24, 2}, {0, 1, 1, 72, 24, 3}}, "", 0},
      {3, 1, 60, 29, {{18, 9, 1, 18, 8, 0}, {12, 7, 1, 54, 26, 1}, {6, 5, 1, 72, 38, 2}, {0, 3, 1, 72, 44, 3}},
       "first exponent printed as n+12w+8", 12},
      {3, 1, 78, 29,
       {{24, 9, 1, 24, 8, 0}, {18, 7, 1, 78, 26, 1}, {12, 5, 1, 114, 38, 2}, {6, 3, 1, 132, 44, 3}, {0, 1, 1, 132, 44, 4}},
       "", 0},
      {3, 1, 78, 35,
       {{24, 11, 1, 24, 10, 0}, {18, 9, 1, 78, 34, 1}, {12, 7, 1, 114, 52, 2}, {6, 5, 1, 132, 64, 3}, {0, 3, 1, 132, 70, 4}},
       "", 0},
      {3, -1, 12, 7, {{0, 1, 2, 0, 0, 0}}, "", 0},
      {3, -1, 12, 13, {{0, 3, 2, 0, 4, 0}}, "", 0},
      {3, -1, 12, 19, {{0, 5, 2, 0, 8, 0}}, "", 0},
      {3, -1, 30, 13, {{6, 3, 2, 12, 4, 0}, {0, 1, 2, 12, 4, 1}}, "", 0},
      {3, -1, 30, 19, {{6, 5, 2, 12, 8, 0}, {0, 3, 2, 12, 14, 1}}, "", 0},
      {3, -1, 48, 19, {{12, 5, 2, 24, 8, 0}, {6, 3, 2, 42, 14, 1}, {0, 1, 2, 42, 14, 2}}, "", 0},
      {3, -1, 48, 25, {{12, 7, 2, 24, 12, 0}, {6, 5, 2, 42, 24, 1}, {0, 3, 2, 42, 30, 2}}, "", 0},
      {3, -1, 66, 25, {{18, 7, 2, 36, 12, 0}, {12, 5, 2, 72, 24, 1}, {6, 3, 2, 90, 30, 2}, {0, 1, 2, 90, 30, 3}}, "", 0},
      {3, -1, 66, 31, {{18, 9, 2, 36, 16, 0}, {12, 7, 2, 72, 34, 1}, {6, 5, 2, 90, 46, 2}, {0, 3, 2, 90, 52, 3}}, "", 0},
  };
}

HCombination evaluate_row(const SymRow& row, long w) {
  CableParams c = cable_params(row.p, w);
  HCombination out;
  out.sign = row.sign;
  for (const auto& t : row.terms)
    out.terms.push_back({t.ha * w + t.hb, t.nm * c.n() + t.ea * w + t.eb + t.dm * c.delta()});
  std::sort(out.terms.begin(), out.terms.end(), [](const HTerm& a, const HTerm& b) { return a.h_index > b.h_index; });
  return out;
}

std::vector<std::vector<std::pair<long, long>>> h_seed_table() {
  return {
      {{1, 0}},
      {{2, 0}},
      {{1, -1}, {3, 0}, {1, 1}},
      {{2, -2}, {2, -1}, {5, 0}, {2, 1}, {2, 2}},
      {{1, -4}, {3, -3}, {4, -2}, {5, -1}, {8, 0}, {5, 1}, {4, 2}, {3, 3}, {1, 4}},
      {{2, -6}, {2, -5}, {6, -4}, {7, -3}, {10, -2}, {10, -1}, {15, 0}, {10, 1}, {10, 2}, {7, 3}, {6, 4}, {2, 5}, {2, 6}},
      {{1, -9}, {3, -8}, {4, -7}, {7, -6}, {11, -5}, {15, -4}, {18, -3}, {21, -2}, {23, -1}, {27, 0},
       {23, 1}, {21, 2}, {18, 3}, {15, 4}, {11, 5}, {7, 6}, {4, 7}, {3, 8}, {1, 9}},
  };
}

std::vector<HbarFixture> hbar_fixtures() {
  return {
      {2, 11, "C(11,2)", 6,
       {{"1"}, {}, {"11", "0", "-11"}, {"-88", "0", "88"}, {"11891/12", "0", "-1137", "0", "1753/12"},
        {"-12826", "0", "47036/3", "0", "-8558/3"},
        {"69672971/360", "0", "-991683/4", "0", "224545/4", "0", "-630551/360"}}},
      {2, 13, "C(13,2)", 6,
       {{"1"}, {}, {"17", "0", "-17"}, {"-156", "0", "156"}, {"24749/12", "0", "-2365", "0", "3631/12"},
        {"-31629", "0", "38662", "0", "-7033"},
        {"203413517/360", "0", "-8687953/12", "0", "1969367/12", "0", "-1855937/360"}}},
      {3, 13, "C(13,3)", 6,
       {{"1"}, {}, {"47", "0", "-47"}, {"-624", "0", "624"}, {"151919/12", "0", "-14605", "0", "23341/12"},
        {"-294528", "0", "361088", "0", "-66560"},
        {"2864712407/360", "0", "-122607733/12", "0", "28027787/12", "0", "-27314027/360"}}},
      // printed under the label C(16,3); the data belong to r = 19
      {3, 19, "C(19,3) (printed as C(16,3))", 5,
       {{"1"}, {}, {"111", "0", "-111"}, {"-2128", "0", "2128"}, {"253477/4", "0", "-73197", "0", "39311/4"},
        {"-2159616", "0", "7947776/3", "0", "-1468928/3"}}},
  };
}

std::vector<AlexanderFixture> alexander_fixtures() {
  return {
      {2, 11, "C(11,2)",
       {{0, -1}, {-7, -1}, {-6, 1}, {-5, 2}, {-4, -2}, {-3, 1}, {-2, -1}, {-1, 1},
        {1, 1}, {2, -1}, {3, 1}, {4, -2}, {5, 2}, {6, 1}, {7, -1}}},
      {2, 13, "C(13,2)",
       {{8, -1}, {-8, -1}, {7, 1}, {-7, 1}, {6, 2}, {-6, 2}, {5, -2}, {-5, -2}, {4, 1}, {-4, 1},
        {3, -1}, {-3, -1}, {2, 1}, {-2, 1}, {1, -1}, {-1, -1}, {0, 1}}},
      {3, 13, "C(13,3)",
       {{15, -1}, {-15, -1}, {14, 1}, {-14, 1}, {12, 2}, {-12, 2}, {11, -2}, {-11, -2}, {9, 1}, {-9, 1},
        {8, -1}, {-8, -1}, {6, 1}, {-6, 1}, {5, -1}, {-5, -1}, {3, 1}, {-3, 1}, {2, -2}, {-2, -2},
        {1, 1}, {-1, 1}, {0, 1}}},
      // printed under C(16,3) with t^21 - t^-21; the polynomial is the r = 19 one with -t^21 - t^-21
      {3, 19, "C(19,3) (printed as C(16,3))",
       {{21, -1}, {-21, -1}, {20, 1}, {-20, 1}, {18, 2}, {-18, 2}, {17, -2}, {-17, -2}, {15, 1}, {-15, 1},
        {14, -1}, {-14, -1}, {12, 1}, {-12, 1}, {11, -1}, {-11, -1}, {9, 1}, {-9, 1}, {8, -1}, {-8, -1},
        {6, 1}, {-6, 1}, {5, -1}, {-5, -1}, {3, 1}, {-3, 1}, {2, -2}, {-2, -2}, {1, 1}, {-1, 1}, {0, 1}}},
  };
}

std::vector<LimitFixture> limit_fixtures() {
  return {
      {2, 11, "C(11,2)", false, 43,
       {{13, 1}, {17, 2}, {21, 5}, {25, 13}, {29, 34}, {33, 89}, {35, -1}, {37, 233}, {39, -2}, {41, 610}, {43, -5}}},
      {2, 13, "C(13,2)", false, 45,
       {{15, 1}, {19, 2}, {23, 5}, {27, 13}, {31, 34}, {35, 89}, {39, 233}, {41, -1}, {43, 610}, {45, -2}}},
      {3, 13, "C(13,3)", true, 71,
       {{29, 2}, {35, 4}, {41, 10}, {47, 26}, {53, 68}, {55, -2}, {59, 178}, {61, -4}, {65, 466}, {67, -10}, {71, 1220}}},
      {3, 16, "C(16,3)", true, 83,
       {{35, 2}, {41, 4}, {47, 10}, {53, 26}, {59, 68}, {65, 178}, {67, -2}, {71, 466}, {73, -4}, {77, 1220},
        {79, -10}, {83, 3194}}},
  };
}

std::vector<SurgeryFixture> surgery_fixtures() {
  return {
      {2, 5, 1, 2, "S^3_{-1/2}(C(11,2))", Rational(167, 2),
       {{0, -1}, {13, 1}, {59, -2}, {76, 2}, {133, -1}, {134, -3}, {135, -1}, {154, 1}, {155, 3}, {156, 1},
        {223, -2}, {224, -2}, {225, -5}, {226, -2}, {227, -2}, {248, 2}, {249, 2}}},
      {2, 5, 1, 3, "S^3_{-1/3}(C(11,2))", Rational(251, 2),
       {{0, -2}, {13, 2}, {89, -4}, {106, 4}, {201, -2}, {202, -6}, {203, -2}, {222, 2}, {223, 6}, {224, 2},
        {337, -4}, {338, -4}, {339, -10}, {340, -4}, {341, -4}, {362, 4}, {363, 4}}},
      {2, 5, 1, 4, "S^3_{-1/4}(C(11,2))", Rational(335, 2),
       {{0, -2}, {13, 2}, {119, -4}, {136, 4}, {269, -2}, {270, -6}, {271, -2}, {290, 2}, {291, 6}, {292, 2},
        {451, -4}, {452, -4}, {453, -10}, {454, -4}, {455, -4}, {476, 4}, {477, 4}}},
      {3, 4, 1, 1, "S^3_{-1}(C(13,3))", Rational(419, 2),
       {{0, -2}, {29, 2}, {95, -4}, {130, 4}, {207, -2}, {208, -6}, {209, -2}, {248, 2}, {249, 6}, {250, 2},
        {337, -4}, {338, -4}, {339, -10}, {340, -4}, {341, -4}, {384, 4}, {385, 4}}},
      {3, 4, 1, 2, "S^3_{-1/2}(C(13,3))", Rational(839, 2),
       {{0, -2}, {29, 2}, {191, -4}, {226, 4}, {417, -2}, {418, -6}, {419, -2}, {458, 2}, {459, 6}, {460, 2},
        {679, -4}, {680, -4}, {681, -10}, {682, -4}, {683, -4}, {726, 4}, {727, 4}}},
      {3, 4, 1, 3, "S^3_{-1/3}(C(13,3))", Rational(1259, 2),
       {{0, -2}, {29, 2}, {287, -4}, {322, 4}, {627, -2}, {628, -6}, {629, -2}, {668, 2}, {669, 6}, {670, 2},
        {1021, -4}, {1022, -4}, {1023, -10}, {1024, -4}, {1025, -4}, {1068, 4}}},
  };
}

namespace {
std::vector<long> offsets_list(long span, long step4_end, long step2_end) {
  std::vector<long> out;
  for (long o = span; o >= step4_end; o -= 4) out.push_back(o);
  for (long o = step4_end - 2; o >= step2_end; o -= 2) out.push_back(o);
  for (long o = step2_end - 4; o >= 0; o -= 4) out.push_back(o);
  return out;
}
}  // namespace

std::vector<RecursionFixture> recursion_fixtures() {
  return {
      {11, 102, 101, 89, offsets_list(102, 82, 20)},
      {13, 106, 105, 91, offsets_list(106, 82, 24)},
      {9, 98, 97, 0, {}},
  };
}

}  // namespace fk::ref
