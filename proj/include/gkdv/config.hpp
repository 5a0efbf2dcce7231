/*
  Run configuration: a nested key/value document mapped onto the module
  configs, with full validation (every out-of-range field reported with
  its path, unknown keys rejected) and environment overrides.
*/
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkdv/initdata.hpp"
#include "gkdv/scales.hpp"
#include "gkdv/solver.hpp"
#include "gkdv/virial.hpp"

namespace gkdv {

struct GridConfig {
  int n = 1024;
  double length = 100.0;
  double center = 0.0;
};

struct MonitorConfig {
  bool farfield = true;
  bool local_decay = true;
  bool mt01bis = false;
  double mt01bis_beta = 0.0;
  double mt01bis_a = 0.0;
  double mt01bis_b = 0.0;  // 0 selects the default 0.9 * 2n/(4n-1)
  bool kato = false;
  double kato_L = 2.0;
  double kato_front = 5.0;
  bool linvirial = false;
  double linvirial_theta = 1.0;
  double linvirial_lambda1 = 1.0;
  double linvirial_lambda2 = 2.0;
  double linvirial_mu = 0.0;
  std::string cadence = "log";  // "log" | "uniform"
  int log_points = 240;
  double liminf_reduction_factor = 10.0;
  bool mu_tracking = false;
  double mu0 = 0.0;
  double boundary_mass_tol = 1e-6;
};

struct ScalesRunConfig {
  double C0 = 1.0;
  double C1 = 1.0;
  double eta = 0.1;
  double beta_min = 1.0;
  std::string regime_override = "auto";  // "auto" | "global" | "blowup"
};

struct OutputConfig {
  std::string directory;
  bool csv = true;
  bool json = true;
  int checkpoint_every = 0;  // monitor samples between field checkpoints; 0 = off
};

struct RunConfig {
  GridConfig grid;
  int p = 6;  // model.p; initial-data specs inherit it
  InitSpec init = GaussianInit{0.0, 1.0, 0.0};
  SolverConfig solver;
  ScalesRunConfig scales;
  MonitorConfig monitors;
  OutputConfig output;
  std::string preset_name;
};

struct ParseResult {
  std::optional<RunConfig> config;
  std::vector<std::string> errors;  // "path: message" entries, all of them
  bool ok() const { return errors.empty() && config.has_value(); }
};

ParseResult parse_config_text(const std::string& json_text);
ParseResult parse_config_file(const std::string& path);

// GKDV_-prefixed variables override config keys 1:1; double underscore
// separates path segments (GKDV_SOLVER__DT_MAX -> solver.dt_max).
ParseResult parse_config_text_with_env(const std::string& json_text);

std::string config_to_json(const RunConfig& cfg);  // effective config echo

}  // namespace gkdv
