#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blk {

enum class ErrorKind {
  SyntaxError,
  NotSingular,
  NonIsolatedSingularity,
  VariableMismatch,
  RankDeficient,
  IrrationalEigenvalue,
  SpreadNotClosing,
  SingularCommutator,
  NotNilpotent,
  StrictnessViolation,
  DegreeNotOne,
  SymmetryViolation,
  SaturationDiverged,
  InvariantViolation,
};

std::string_view kind_name(ErrorKind kind);

// Exit code used by the command line tool for each error kind.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace blk
