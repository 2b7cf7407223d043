#pragma once

#include <stdexcept>
#include <string>

namespace qspectra {

enum class ErrorCode {
  MissingAssignment,
  ZeroBaseNegativeExponent,
  DivisionByZero,
  DenominatorVanishes,
  OrderMismatch,
  FormalVarMismatch,
  NonUnitConstantTerm,
  NotFormalVariable,
  IndexOutOfRange,
  InvalidPartition,
  InvalidArgument,
  NotApplicable,
  OrderExceeded,
  ResampleCapExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qspectra
