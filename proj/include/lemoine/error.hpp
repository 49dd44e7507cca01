#pragma once

#include <stdexcept>
#include <string>

namespace lemoine {

enum class ErrorCode {
  DegenerateInput,
  ParallelLines,
  CollinearPoints,
  NotConcyclic,
  CoincidentPoints,
  PointNotOnCircle,
  DegenerateTangency,
  AntipodalChord,
  DegenerateBase,
  NotCollinear,
  PointOutsideCircle,
  PointAtVertex,
  PoleAtInfinity,
  EquilateralDegenerate,
  DegeneratePivot,
  TangentialDegeneracy,
  NoRealIntersection,
  DegenerateStep,
  TargetOutOfRange,
  NonFinite,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::NotConcyclic: return "NotConcyclic";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::PointNotOnCircle: return "PointNotOnCircle";
    case ErrorCode::DegenerateTangency: return "DegenerateTangency";
    case ErrorCode::AntipodalChord: return "AntipodalChord";
    case ErrorCode::DegenerateBase: return "DegenerateBase";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::PointOutsideCircle: return "PointOutsideCircle";
    case ErrorCode::PointAtVertex: return "PointAtVertex";
    case ErrorCode::PoleAtInfinity: return "PoleAtInfinity";
    case ErrorCode::EquilateralDegenerate: return "EquilateralDegenerate";
    case ErrorCode::DegeneratePivot: return "DegeneratePivot";
    case ErrorCode::TangentialDegeneracy: return "TangentialDegeneracy";
    case ErrorCode::NoRealIntersection: return "NoRealIntersection";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace lemoine
