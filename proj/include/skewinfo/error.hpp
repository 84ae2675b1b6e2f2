#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewinfo {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NegativeSpectrum,
  DimMismatch,
  AlphaOutOfRange,
  ExponentOutOfRange,
  NonFinite,
  BadTrace,
  BadSpec,
  NoWitness,
  Inconsistent,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception; `kind()` names the
// violated invariant so front ends can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skewinfo
