/*
  Named verification suites runnable from the CLI: property checks with
  measured values, one verdict per property.
*/
#pragma once

#include <string>
#include <vector>

#include "gkdv/diagnostics.hpp"

namespace gkdv {

std::vector<std::string> verify_suite_names();  // grid initdata identities inequalities scales
std::vector<Verdict> verify_suite(const std::string& name);

}  // namespace gkdv
