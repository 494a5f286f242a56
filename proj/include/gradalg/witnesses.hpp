#pragma once

#include "gradalg/scalar.hpp"

#include <string>
#include <vector>

namespace gradalg::witnesses {

struct AssertionResult {
  std::string description;
  bool passed = false;
  /// Exception text or extra context for a failure.
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  Field field;
  std::vector<AssertionResult> assertions;

  bool passed() const;
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
};

/// Registered scenarios, sorted by name.
const std::vector<ScenarioInfo>& scenarios();

/// Builds the scenario's objects over `field` and evaluates every
/// assertion. Throws InputError for an unknown name. Failures inside a
/// construction are recorded as failed assertions, never thrown.
ScenarioReport run(const std::string& name, Field field);
/// Every scenario over every field, in name order then field order.
std::vector<ScenarioReport> run_all(const std::vector<Field>& fields);
/// Q, GF(2), GF(3).
std::vector<Field> default_fields();

std::string render(const ScenarioReport& report);

}  // namespace gradalg::witnesses
