#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fk/apoly.hpp"

namespace fk::cli {

enum class Command {
  h,
  cable,
  mirror,
  recursion_derive,
  recursion_solve,
  recursion_verify,
  alexander,
  selimit,
  jones,
  jones_hbar,
  zhat,
  verify_all,
};

enum class Format { json, text };

struct RunConfig {
  Command command = Command::h;
  std::string knot = "cable";  // or "4_1"
  int p = 2;
  long r = 0;
  long w = 0;
  long m_max = 0;  // 0 picks a command-specific default
  long h_max = 13;
  int order = 6;
  long n = 1;
  std::string slope = "-1/2";
  long b = 0;
  long q_max = 100;
  bool mirrored = false;
  OperatorVariant variant = OperatorVariant::corrected;
  int only = 0;  // verify-all: run a single criterion
  Format format = Format::json;
  std::string input;
  std::string output;
};

struct Parsed {
  std::optional<RunConfig> config;
  int exit_code = 0;  // meaningful when config is empty
};

// Usage errors are reported on err and yield exit code 2.
Parsed parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// 0 success, 1 verification failure or library error, 2 usage error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fk::cli
