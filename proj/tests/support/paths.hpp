#pragma once

#include <filesystem>
#include <string>

namespace argdlpa::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(ARGDLPA_FIXTURE_DIR) / name;
}

inline std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(ARGDLPA_GOLDEN_DIR) / name;
}

}  // namespace argdlpa::testing
