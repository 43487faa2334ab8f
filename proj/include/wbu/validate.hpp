#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "wbu/kernels.hpp"

namespace wbu {

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when the suite passed
  bool passed() const { return failures == 0 && samples > 0; }
};

struct ValidateOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  // "xi-sign" flips the sign of the Ξ functional inside the numerical suites (negative control).
  std::string mutate;
  kernels::Policy policy = kernels::default_policy();
};

std::vector<SuiteResult> run_validation(const ValidateOptions& opts);
nlohmann::json validation_to_json(const std::vector<SuiteResult>& results);
std::string validation_to_text(const std::vector<SuiteResult>& results);

}  // namespace wbu
