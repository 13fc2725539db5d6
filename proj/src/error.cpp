#include "blk/error.hpp"

namespace blk {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::NonIsolatedSingularity: return "NonIsolatedSingularity";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case ErrorKind::SpreadNotClosing: return "SpreadNotClosing";
    case ErrorKind::SingularCommutator: return "SingularCommutator";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::StrictnessViolation: return "StrictnessViolation";
    case ErrorKind::DegreeNotOne: return "DegreeNotOne";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::SaturationDiverged: return "SaturationDiverged";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::NotSingular:
      return 2;
    case ErrorKind::NonIsolatedSingularity:
      return 3;
    default:
      return 4;
  }
}

}  // namespace blk
