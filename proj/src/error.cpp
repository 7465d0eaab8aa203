#include "qj/error.hpp"

namespace qj {

std::string_view error_token(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "E_DIVISION_BY_ZERO";
    case ErrorCode::FieldMismatch: return "E_FIELD_MISMATCH";
    case ErrorCode::ZeroPolynomial: return "E_ZERO_POLYNOMIAL";
    case ErrorCode::DegreeOverflow: return "E_DEGREE_OVERFLOW";
    case ErrorCode::InvalidField: return "E_INVALID_FIELD";
    case ErrorCode::NotOnCurveAtInfinity: return "E_NOT_ON_CURVE_AT_INFINITY";
    case ErrorCode::NoHyperflexNormalization: return "E_NO_HYPERFLEX_NORMALIZATION";
    case ErrorCode::SingularCurve: return "E_SINGULAR_CURVE";
    case ErrorCode::WrongTangent: return "E_WRONG_TANGENT";
    case ErrorCode::ComponentShared: return "E_COMPONENT_SHARED";
    case ErrorCode::NotOnCurve: return "E_NOT_ON_CURVE";
    case ErrorCode::SingularPoint: return "E_SINGULAR_POINT";
    case ErrorCode::WrongDegree: return "E_WRONG_DEGREE";
    case ErrorCode::PointOffCurve: return "E_POINT_OFF_CURVE";
    case ErrorCode::SamplingExhausted: return "E_SAMPLING_EXHAUSTED";
    case ErrorCode::SingularSystem: return "E_SINGULAR_SYSTEM";
    case ErrorCode::NotInZ: return "E_NOT_IN_Z";
    case ErrorCode::NoDecomposition: return "E_NO_DECOMPOSITION";
    case ErrorCode::CommonComponent: return "E_COMMON_COMPONENT";
    case ErrorCode::ShapeViolation: return "E_SHAPE_VIOLATION";
    case ErrorCode::ExcessIntersection: return "E_EXCESS_INTERSECTION";
    case ErrorCode::DegenerateConicSystem: return "E_DEGENERATE_CONIC_SYSTEM";
    case ErrorCode::InternalConsistency: return "E_INTERNAL_CONSISTENCY";
    case ErrorCode::BudgetExceeded: return "E_BUDGET_EXCEEDED";
    case ErrorCode::InconsistentCounts: return "E_INCONSISTENT_COUNTS";
    case ErrorCode::Parse: return "E_PARSE";
  }
  return "E_UNKNOWN";
}

}  // namespace qj
