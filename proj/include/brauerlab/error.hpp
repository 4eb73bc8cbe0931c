#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerlab {

enum class ErrorCode {
  ZeroDenominator,
  Overflow,
  UnprofiledPrime,
  UnknownEntry,
  ProfileGap,
  FieldMismatch,
  DegreeMismatch,
  IncomparableProfiles,
  CoverageGap,
  InsufficientPrimes,
  DegreeConstraint,
  BijectionNotLocal,
  CertificateMismatch,
  NotFreePrime,
  InconsistentArch,
  PlanViolation,
  ScenarioFailure,
  ParseError,
  DuplicateInput,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. Parse and input errors use
/// the same type so the CLI can map codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace brauerlab
