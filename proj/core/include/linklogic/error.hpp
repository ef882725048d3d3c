#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linklogic {

enum class ErrorKind {
  NoConvergence,
  BindingDetected,
  DegenerateAdvantage,
  BindingViolation,
  BothSidesFree,
  BothSidesLocked,
  CrosscheckFailed,
  ForbiddenState,
  ScheduleViolation,
  NotReversible,
  NonPeriodicProfile,
  SyntaxError,
  UnknownName,
  DuplicateName,
  ForbiddenWiring,
  Validation,
  IoFailure,
};

std::string_view to_string(ErrorKind kind);

// Base of every library error. line/col are 1-based and 0 when unknown.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0, int col = 0)
      : std::runtime_error(what), kind_(kind), line_(line), col_(col) {}

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  ErrorKind kind_;
  int line_;
  int col_;
};

template <ErrorKind K>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what, int line = 0, int col = 0)
      : Error(K, what, line, col) {}
};

using NoConvergence = ErrorOf<ErrorKind::NoConvergence>;
using BindingDetected = ErrorOf<ErrorKind::BindingDetected>;
using DegenerateAdvantage = ErrorOf<ErrorKind::DegenerateAdvantage>;
using BindingViolation = ErrorOf<ErrorKind::BindingViolation>;
using BothSidesFree = ErrorOf<ErrorKind::BothSidesFree>;
using BothSidesLocked = ErrorOf<ErrorKind::BothSidesLocked>;
using CrosscheckFailed = ErrorOf<ErrorKind::CrosscheckFailed>;
using ForbiddenState = ErrorOf<ErrorKind::ForbiddenState>;
using ScheduleViolation = ErrorOf<ErrorKind::ScheduleViolation>;
using NotReversible = ErrorOf<ErrorKind::NotReversible>;
using NonPeriodicProfile = ErrorOf<ErrorKind::NonPeriodicProfile>;
using SyntaxError = ErrorOf<ErrorKind::SyntaxError>;
using UnknownName = ErrorOf<ErrorKind::UnknownName>;
using DuplicateName = ErrorOf<ErrorKind::DuplicateName>;
using ForbiddenWiring = ErrorOf<ErrorKind::ForbiddenWiring>;
using ValidationError = ErrorOf<ErrorKind::Validation>;
using IoFailure = ErrorOf<ErrorKind::IoFailure>;

}  // namespace linklogic
