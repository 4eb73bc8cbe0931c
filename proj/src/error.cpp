#include "brauerlab/error.hpp"

#include "brauerlab/report.hpp"

namespace brauerlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnprofiledPrime: return "UnprofiledPrime";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::ProfileGap: return "ProfileGap";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::IncomparableProfiles: return "IncomparableProfiles";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::InsufficientPrimes: return "InsufficientPrimes";
    case ErrorCode::DegreeConstraint: return "DegreeConstraint";
    case ErrorCode::BijectionNotLocal: return "BijectionNotLocal";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::NotFreePrime: return "NotFreePrime";
    case ErrorCode::InconsistentArch: return "InconsistentArch";
    case ErrorCode::PlanViolation: return "PlanViolation";
    case ErrorCode::ScenarioFailure: return "ScenarioFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateInput: return "DuplicateInput";
  }
  return "Unknown";
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

}  // namespace brauerlab
