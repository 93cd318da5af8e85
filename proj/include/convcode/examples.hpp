#pragma once

#include <filesystem>
#include <string>

#include "convcode/polymatrix.hpp"

namespace convcode {

/// Directory holding `examples/<name>.json`; set at build time, overridable
/// through the CONVCODE_DATA_DIR environment variable.
std::filesystem::path default_data_dir();

/// Loads `<data_dir>/examples/<name>.json`.
PolyMatrix example_matrix(const std::string& name, const std::filesystem::path& data_dir = default_data_dir());

}  // namespace convcode
