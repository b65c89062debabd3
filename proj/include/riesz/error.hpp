#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

enum class ErrorKind {
  kEmptySet,
  kOutOfRange,
  kScaleOverflow,
  kArity,
  kBetaTooLarge,
  kSearchFailure,
  kDegenerateSystem,
  kNotHermitian,
  kEigenFailure,
  kWindowRatio,
  kMinorCap,
  kParse,
};

// All library failures surface as this one exception type; `kind()` lets
// front ends map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace riesz
