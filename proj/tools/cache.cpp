#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "fk/json.hpp"

namespace fk::cache {

namespace fs = std::filesystem;

namespace {

std::optional<json> read_json(const fs::path& path, std::ostream& log) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    log << "cache: ignoring unreadable " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void write_json(const fs::path& path, const json& j, std::ostream& log) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      log << "cache: cannot write " << tmp.string() << "\n";
      return;
    }
    out << j.dump() << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) log << "cache: cannot move " << tmp.string() << ": " << ec.message() << "\n";
}

}  // namespace

std::optional<fs::path> directory() {
  const char* env = std::getenv("FK_CACHE_DIR");
  if (!env || !*env) return std::nullopt;
  fs::path dir(env);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return std::nullopt;
  return dir;
}

HTable load_htable(std::ostream& log) {
  auto dir = directory();
  if (dir)
    if (auto j = read_json(*dir / "htable.json", log)) {
      try {
        return htable_from_json(*j);
      } catch (const std::exception& e) {
        log << "cache: discarding htable.json: " << e.what() << "\n";
      }
    }
  return HTable();
}

void store_htable(const HTable& table, std::ostream& log) {
  auto dir = directory();
  if (!dir) return;
  fs::path path = *dir / "htable.json";
  if (auto j = read_json(path, log))
    if (j->contains("h") && long((*j)["h"].size()) >= long(table.entries().size())) return;
  write_json(path, to_json(table), log);
}

MRecursion recursion(long r, OperatorVariant variant, std::ostream& log) {
  auto dir = directory();
  std::string name = "mrecursion_r" + std::to_string(r) + (variant == OperatorVariant::corrected ? "" : "_printed") + ".json";
  if (dir)
    if (auto j = read_json(*dir / name, log)) {
      try {
        MRecursion rec = m_recursion_from_json(*j);
        if (rec.r == r) return rec;
      } catch (const std::exception& e) {
        log << "cache: discarding " << name << ": " << e.what() << "\n";
      }
    }
  MRecursion rec = m_recursion_for(r, variant);
  if (dir) write_json(*dir / name, to_json(rec), log);
  return rec;
}

}  // namespace fk::cache
