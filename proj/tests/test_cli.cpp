#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fk/json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result fk_run(std::vector<std::string> args) {
  args.insert(args.begin(), "fk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fk::cli::main_entry(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FK_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: output matches the checked-in goldens") {
  struct G {
    std::vector<std::string> args;
    std::string file;
  };
  std::vector<G> cases = {
      {{"h", "--max", "13", "--format", "text"}, "h_13.txt"},
      {{"cable", "--p", "2", "--r", "11", "--mmax", "105"}, "cable_p2_r11_m105.json"},
      {{"cable", "--p", "3", "--r", "13", "--mmax", "71", "--format", "text"}, "cable_p3_r13_m71.txt"},
      {{"alexander", "--p", "2", "--r", "11"}, "alexander_p2_r11.json"},
      {{"zhat", "--p", "2", "--r", "11", "--slope", "-1/2", "--b", "0", "--qmax", "300", "--format", "text"},
       "zhat_p2_r11_s-1_2_q300.txt"},
      {{"zhat", "--p", "3", "--r", "13", "--slope", "-1", "--qmax", "400"}, "zhat_p3_r13_s-1_q400.json"},
      {{"jones-hbar", "--p", "2", "--r", "11", "--order", "6"}, "jones_hbar_p2_r11_o6.json"},
      {{"jones", "--n", "3", "--format", "text"}, "jones_p2_r11_n3.txt"},
      {{"selimit", "--p", "3", "--r", "13", "--mmax", "71", "--format", "text"}, "selimit_p3_r13_m71.txt"},
      {{"recursion", "--r", "11", "derive", "--format", "text"}, "recursion_r11_derive.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    Result r = fk_run(c.args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(c.file));
  }
}

TEST_CASE("cli: cable JSON decodes to the printed f_105") {
  Result r = fk_run({"cable", "--p", "2", "--r", "11", "--mmax", "105"});
  fk::FkSeries f = fk::fk_series_from_json(fk::json::parse(r.out));
  fk::HTable t;
  fk::LPoly want = (t.h(47).shifted(29) + t.h(25).shifted(101) + t.h(3).shifted(129)) * fk::BigInt(2);
  CHECK(f.at(105) == want);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(fk_run({}).code == 2);
  CHECK(fk_run({"nope"}).code == 2);
  CHECK(fk_run({"cable", "--mmax", "40"}).code == 2);
  CHECK(fk_run({"cable", "--p", "2", "--r", "12"}).code == 2);
  CHECK(fk_run({"cable", "--p", "2", "--r", "11", "--w", "4"}).code == 2);
  CHECK(fk_run({"cable", "--p", "5", "--w", "4"}).code == 2);
  CHECK(fk_run({"cable", "--p", "2", "--w", "3"}).code == 2);
  CHECK(fk_run({"zhat", "--slope", "1/2"}).code == 2);
  CHECK(fk_run({"h", "--max", "12"}).code == 2);
  CHECK(fk_run({"recursion", "--r", "11"}).code == 2);
  CHECK(fk_run({"cable", "--format", "xml"}).code == 2);
  CHECK(fk_run({"verify-all", "--only", "9"}).code == 2);
  Result r = fk_run({"cable", "--p", "2", "--w", "3"});
  CHECK(r.err.find("UnsupportedW") != std::string::npos);
}

TEST_CASE("cli: library errors name the failing kind") {
  Result r = fk_run({"zhat", "--p", "2", "--r", "11", "--slope", "-1/2", "--qmax", "300", "--mmax", "21"});
  CHECK(r.code == 1);
  CHECK(r.err.find("TruncationInsufficient") != std::string::npos);
}

TEST_CASE("cli: help exits cleanly") {
  Result r = fk_run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-all") != std::string::npos);
}

TEST_CASE("cli: mirror, recursion and files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fk_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string series = (dir / "s.json").string();
  CHECK(fk_run({"cable", "--mmax", "61", "-o", series}).code == 0);
  Result m = fk_run({"mirror", "-i", series});
  REQUIRE(m.code == 0);
  fk::FkSeries a = fk::fk_series_from_json(fk::json::parse(m.out));
  CHECK(a.knot.mirrored);
  CHECK(a.at(13) == fk::LPoly::monomial(2, -6));
  CHECK(fk_run({"mirror", "-i", (dir / "missing.json").string()}).code == 2);

  Result v = fk_run({"recursion", "--r", "9", "verify", "--mmax", "121"});
  CHECK(v.code == 0);
  CHECK(fk::json::parse(v.out)["pass"] == true);
  Result s = fk_run({"recursion", "--w", "4", "solve", "--mmax", "121"});
  REQUIRE(s.code == 0);
  Result g = fk_run({"cable", "--w", "4", "--mmax", "121"});
  CHECK(fk::json::parse(s.out)["fm"] == fk::json::parse(g.out)["fm"]);
  Result sel = fk_run({"selimit", "--p", "2", "--r", "13", "--mmax", "81"});
  CHECK(sel.code == 0);
  CHECK(fk_run({"jones", "--knot", "4_1", "--n", "2", "--format", "text"}).out == "J_2(q) = q⁻² - q⁻¹ + 1 - q + q²\n");
  fs::remove_all(dir);
}

TEST_CASE("cli: cache directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fk_cli_cache";
  fs::remove_all(dir);
  setenv("FK_CACHE_DIR", dir.c_str(), 1);
  Result first = fk_run({"recursion", "--r", "9", "derive"});
  CHECK(fs::exists(dir / "mrecursion_r9.json"));
  CHECK(fs::exists(dir / "htable.json") == false);
  Result second = fk_run({"recursion", "--r", "9", "derive"});
  CHECK(first.out == second.out);
  CHECK(fk_run({"h", "--max", "41"}).code == 0);
  CHECK(fs::exists(dir / "htable.json"));
  Result h = fk_run({"h", "--max", "41", "--format", "text"});
  unsetenv("FK_CACHE_DIR");
  Result fresh = fk_run({"h", "--max", "41", "--format", "text"});
  CHECK(h.out == fresh.out);
  // a corrupt cache is ignored
  { std::ofstream(dir / "htable.json") << "{not json"; }
  setenv("FK_CACHE_DIR", dir.c_str(), 1);
  Result again = fk_run({"h", "--max", "41", "--format", "text"});
  unsetenv("FK_CACHE_DIR");
  CHECK(again.out == fresh.out);
  fs::remove_all(dir);
}
