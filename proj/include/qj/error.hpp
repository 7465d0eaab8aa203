#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qj {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroPolynomial,
  DegreeOverflow,
  InvalidField,
  NotOnCurveAtInfinity,
  NoHyperflexNormalization,
  SingularCurve,
  WrongTangent,
  ComponentShared,
  NotOnCurve,
  SingularPoint,
  WrongDegree,
  PointOffCurve,
  SamplingExhausted,
  SingularSystem,
  NotInZ,
  NoDecomposition,
  CommonComponent,
  ShapeViolation,
  ExcessIntersection,
  DegenerateConicSystem,
  InternalConsistency,
  BudgetExceeded,
  InconsistentCounts,
  Parse,
};

/// Stable token used on the command line, e.g. "E_DIVISION_BY_ZERO".
std::string_view error_token(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qj
