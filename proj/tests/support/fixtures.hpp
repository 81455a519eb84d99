#pragma once

#include "skyway/scenario.hpp"

#include <string>

namespace skyway::testing {

inline std::string scenario_path(const std::string& name) {
  return std::string(SKYWAY_SCENARIO_DIR) + "/" + name;
}

inline Scenario load_fixture(const std::string& name) {
  return parse_scenario(read_text_file(scenario_path(name)));
}

}  // namespace skyway::testing
