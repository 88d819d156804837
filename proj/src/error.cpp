#include "germforge/error.hpp"

namespace germforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::NotZeroDimensional: return "NOT_ZERO_DIMENSIONAL";
    case ErrorCode::ZeroIdeal: return "ZERO_IDEAL";
    case ErrorCode::FNotInIdeal: return "F_NOT_IN_IDEAL";
    case ErrorCode::NotFiniteCodim: return "NOT_FINITE_CODIM";
    case ErrorCode::FNotUnfolding: return "F_NOT_UNFOLDING";
    case ErrorCode::FNotInJSquared: return "F_NOT_IN_JSQUARED";
    case ErrorCode::NonAdaptedCoordinates: return "NON_ADAPTED_COORDINATES";
    case ErrorCode::RadicalUnavailable: return "RADICAL_UNAVAILABLE";
    case ErrorCode::NotIsolated: return "NOT_ISOLATED";
    case ErrorCode::InfiniteLength: return "INFINITE_LENGTH";
    case ErrorCode::PositiveDimensionalCriticalLocus: return "POSITIVE_DIMENSIONAL_CRITICAL_LOCUS";
    case ErrorCode::GenericitySuspect: return "GENERICITY_SUSPECT";
    case ErrorCode::NonrationalPoints: return "NONRATIONAL_POINTS";
    case ErrorCode::UnknownCommand: return "UNKNOWN_COMMAND";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
  }
  return "UNKNOWN";
}

}  // namespace germforge
