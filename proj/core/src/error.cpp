#include "linklogic/error.hpp"

namespace linklogic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BindingDetected: return "BindingDetected";
    case ErrorKind::DegenerateAdvantage: return "DegenerateAdvantage";
    case ErrorKind::BindingViolation: return "BindingViolation";
    case ErrorKind::BothSidesFree: return "BothSidesFree";
    case ErrorKind::BothSidesLocked: return "BothSidesLocked";
    case ErrorKind::CrosscheckFailed: return "CrosscheckFailed";
    case ErrorKind::ForbiddenState: return "ForbiddenState";
    case ErrorKind::ScheduleViolation: return "ScheduleViolation";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::NonPeriodicProfile: return "NonPeriodicProfile";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::ForbiddenWiring: return "ForbiddenWiring";
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace linklogic
