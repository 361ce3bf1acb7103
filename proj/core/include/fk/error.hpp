#pragma once

#include <stdexcept>
#include <string>

namespace fk {

enum class ErrorKind {
  NotDivisible,
  GridViolation,
  InconsistentSamples,
  TruncationInsufficient,
  UnsupportedW,
  BadParameter,
  NonUnitLeading,
  NonSolvableLeading,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above; what()
// is prefixed with the kind name so diagnostics always name it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fk
