/*
  Time-dependent scale functions: the beta envelopes on both half-lines,
  the increasing majorant of |grad u|^{n-1}, and the compact-region scale
  laws for both the blow-up and global regimes.
*/
#pragma once

#include <optional>
#include <vector>

#include "gkdv/grid.hpp"

namespace gkdv {

enum class Regime { global, blowup };

struct ScaleConfig {
  int p = 6;
  double C0 = 1.0;
  double C1 = 1.0;
  double eta = 0.1;
  // Lower floor for the beta majorant.  Any smooth increasing function
  // dominating |grad u|^{n-1} is admissible; flooring keeps the compact
  // window wider than the grid spacing on small-data runs.
  double beta_min = 1.0;
  int envelope_width = 10;  // trailing-average smoothing of the majorant
};

struct CompactScales {
  double theta = 0.0;
  double lambda1 = 0.0;      // proof-version window half-width
  double lambda2 = 0.0;
  double mu_prime_bound = 0.0;
  double lambda_statement = 0.0;  // theorem-statement window, reported alongside
  double beta = 0.0;
};

// Gradient history plus the derived running quantities.  Owned by one
// run and updated in time order.
class ScaleState {
 public:
  ScaleState(Regime regime, ScaleConfig cfg,
             std::optional<double> T_star_estimate = std::nullopt);

  Regime regime() const { return regime_; }
  const ScaleConfig& config() const { return cfg_; }
  std::optional<double> T_star_estimate() const { return T_star_; }
  void set_T_star_estimate(double T_star);

  void push(double t, double grad_l2);
  int size() const { return static_cast<int>(times_.size()); }
  double t_front() const;
  double t_back() const;
  double grad_at(double t) const;  // linear interpolation inside the history

  // C0 * (t + int_0^t |grad u|^{(p-1)/2} ds), trapezoid over samples.
  double beta_right(double t) const;

  // Blow-up regime: C1 |grad u(t)|^{(p-1)/2} (T*-t) |log(T*-t)|^{1+eta}.
  // Global regime:  C1 (1 + |grad u(t)|^{(p-1)/2}) t |log t|^{1+eta}.
  double beta_left(double t) const;

  // Running maximum of |grad u|^{n-1} (p = 2n), trailing-average
  // smoothed, floored at beta_min; non-decreasing and dominating.
  double beta_floor(double t) const;

  // tau = s = T*-t (blow-up, 0 < s < min(1/2, T*)) or tau = t >= e^2
  // (global).  |log| magnitudes throughout.
  CompactScales compact_scales(double tau) const;

 private:
  int index_at_or_before(double t) const;

  Regime regime_;
  ScaleConfig cfg_;
  std::optional<double> T_star_;
  std::vector<double> times_;
  std::vector<double> grads_;
  std::vector<double> integral_;  // cumulative trapezoid of g^{(p-1)/2}
  std::vector<double> floor_;     // increasing majorant of g^{n-1}
};

// One mu update: candidate moves toward the u^2 centroid of the current
// window, displacement clipped to mu_prime_bound * dt.  fixed_mode keeps
// mu unchanged (mu' = 0 is always admissible).
double mu_track(const ScaleState& state, const Field& f, double prev_mu, double dt, double tau,
                bool fixed_mode);

}  // namespace gkdv
