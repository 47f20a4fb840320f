#pragma once

#include <stdexcept>
#include <string>

namespace skingame {

enum class ErrorKind {
  kValidation,
  kDegenerateSplit,
  kInfiniteMean,
  kInfeasibleFamily,
  kEmptySeries,
  kNoBlowup,
  kNoSurvivor,
  kIo,
};

// All library failures are reported through this one exception type; the kind
// selects the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::kValidation, what);
}

}  // namespace skingame
