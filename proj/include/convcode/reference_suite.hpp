#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "convcode/budget.hpp"

namespace convcode {

/// One reproduced statement about a worked example.
struct SuiteCheck {
  std::string example;
  int criterion;  ///< acceptance criterion number (1-7)
  std::string description;
  bool passed;
  std::string detail;  ///< computed value on failure, empty otherwise
};

/// Example names accepted by run_reference_suite, in execution order.
std::vector<std::string> reference_example_names();

/// Runs the checks of every example, or of the one named by `filter`
/// ("exa3.4" and "exa4.3" are aliases). Throws std::invalid_argument for an
/// unknown name.
std::vector<SuiteCheck> run_reference_suite(const std::optional<std::string>& filter,
                                            const std::filesystem::path& data_dir, const Budgets& budgets = {});

}  // namespace convcode
