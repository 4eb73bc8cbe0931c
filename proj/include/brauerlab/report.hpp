#pragma once

#include <string>
#include <vector>

namespace brauerlab {

/// Outcome of a validation or certificate check. Empty violations means pass;
/// notes carry caveats that do not fail the check (e.g. unverified metadata).
struct Report {
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  void fail(std::string message) { violations.push_back(std::move(message)); }
  void note(std::string message) { notes.push_back(std::move(message)); }
  void merge(const Report& other, const std::string& prefix = {});
};

}  // namespace brauerlab
