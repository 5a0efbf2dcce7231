/*
  Named experiment presets.  Each returns a complete RunConfig; numeric
  choices (domains, steps, detection thresholds) were calibrated on the
  desk-scale runs the acceptance suite replays.
*/
#pragma once

#include <string>
#include <vector>

#include "gkdv/config.hpp"

namespace gkdv {

std::vector<std::string> preset_names();
RunConfig preset_config(const std::string& name);

}  // namespace gkdv
