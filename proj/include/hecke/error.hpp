#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class ErrorCode {
  NotAUnit,
  DivisionByZero,
  BothZero,
  ZeroInput,
  FactorCapExceeded,
  NotCoprime,
  IterationCapExceeded,
  BadDeterminant,
  UnitModulus,
  BoundExceeded,
  IntegrityError,
  BadRange,
  NotReduced,
  NotAGroup,
  SyntaxError,
  Overflow,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code; the
/// CLI renders it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hecke
