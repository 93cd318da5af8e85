#include "convcode/examples.hpp"

#include <cstdlib>

#include "convcode/io.hpp"

#ifndef CONVCODE_DATA_DIR
#define CONVCODE_DATA_DIR "data"
#endif

namespace convcode {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CONVCODE_DATA_DIR"); env && *env) return env;
  return CONVCODE_DATA_DIR;
}

PolyMatrix example_matrix(const std::string& name, const std::filesystem::path& data_dir) {
  return load_matrix(data_dir / "examples" / (name + ".json"));
}

}  // namespace convcode
