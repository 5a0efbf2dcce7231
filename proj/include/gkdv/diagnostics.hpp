/*
  Theorem monitors and the experiment runner: half-line mass evacuation,
  normalized local L^{2n} decay with running-minimum (liminf proxy)
  tracking, virial identity residuals along evolved trajectories, and
  per-run verdicts.
*/
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkdv/analysis.hpp"
#include "gkdv/config.hpp"
#include "gkdv/scales.hpp"
#include "gkdv/solver.hpp"
#include "gkdv/virial.hpp"

namespace gkdv {

enum class HalflineSide { right, left };

// Localized L^2 squared over {x >= threshold} (right) or {x <= -threshold}
// (left).  A threshold outside the domain yields 0 and sets the flag.
double halfline_mass(const Field& f, HalflineSide side, double threshold,
                     bool* out_of_domain = nullptr);

// (1/beta) * integral over [mu-lambda, mu+lambda) of f^{2n}, window
// clamped to the domain.
double normalized_local_lp(const Field& f, double beta, double mu, double lambda, int n);

struct MonitorRecord {
  double t = 0.0;
  double right_mass = 0.0;
  double left_mass = 0.0;
  double local_lp_normalized = 0.0;
  double running_min_local = 0.0;
  double J_quad = 0.0;
  double J_lin = 0.0;
  double kato_residual = 0.0;
  double linvirial_residual = 0.0;
  double theta = 0.0, lambda1 = 0.0, lambda2 = 0.0, mu = 0.0;
  double beta_right = 0.0, beta_left = 0.0, beta_floor = 0.0;
};

struct Verdict {
  std::string name;
  std::string criterion;  // acceptance criterion this verdict references
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct ExperimentReport {
  RunConfig config;
  Regime regime = Regime::global;
  std::optional<double> T_star_estimate;
  bool T_star_from_fit = false;
  std::vector<ConservationRecord> conservation;
  std::vector<MonitorRecord> monitors;
  std::vector<KatoTerms> kato_terms;                 // aligned with monitors when enabled
  std::vector<LinearVirialTerms> linvirial_terms;    // aligned with monitors when enabled
  std::vector<Verdict> verdicts;
  std::vector<std::string> warnings;
  std::optional<BlowupEvent> blowup;
  std::vector<TrajectoryEvent> events;
  std::vector<std::pair<double, Field>> checkpoints;
  bool reached_t_end = false;

  bool all_pass() const;
};

ExperimentReport run_experiment(const RunConfig& cfg);

}  // namespace gkdv
