#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  NotPerfectSquare,
  DimensionMismatch,
  IndexOutOfRange,
  NotDivisible,
  InvalidDegree,
  NonSymmetricInput,
  NotTranslationInvariant,
  CoincidentCoordinates,
  ResolventPole,
  NoConsistentRoot,
  AmbiguousRoot,
  NoAnnihilatedVacuum,
  TruncationTooSmall,
  ConfigError,
  IoError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace su11
