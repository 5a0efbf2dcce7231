/*
  Pseudospectral time evolution of u_t + (u_xx + u^p)_x = 0.  The Airy
  part is integrated exactly in frequency space; the nonlinear product is
  formed in physical space with configurable dealiasing.  Two fourth-order
  schemes: integrating-factor RK4 and ETD-RK4.
*/
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkdv/grid.hpp"

namespace gkdv {

enum class Scheme { if_rk4, etd_rk4 };

enum class DealiasKind { two_thirds, zero_pad };

struct DealiasSpec {
  DealiasKind kind = DealiasKind::two_thirds;
  int factor = 2;  // zero_pad only; must be >= ceil((p+1)/2)
};

// two-thirds rule by default; full zero padding for the steeper products
// of p >= 6 where the 2/3 mask no longer removes every alias.
DealiasSpec default_dealias(int p);

struct SolverConfig {
  int p = 2;
  Scheme scheme = Scheme::if_rk4;
  DealiasSpec dealias = default_dealias(2);
  double dt = 0.0;  // > 0 fixes the step; 0 selects the adaptive policy
  double cfl_safety = 0.5;
  double dt_min = 1e-9;
  double dt_max = 1e-2;
  double t_end = 1.0;
  double blowup_sup_threshold = 1e6;
  double blowup_grad_factor = 1e4;  // relative to the initial gradient norm
  int sample_every = 10;            // steps between diagnostic samples
  bool keep_sample_fields = false;

  void validate() const;  // throws std::invalid_argument with the offending field
};

enum class BlowupReason { sup_threshold, grad_factor, nonfinite };

std::string to_string(BlowupReason r);

struct BlowupFit {
  double T_star = 0.0;
  double exponent = 0.0;
  double rms_log_residual = 0.0;
  int n_samples = 0;
  bool reliable = false;  // fit window holds at least 8 samples
};

struct BlowupEvent {
  double t_detect = 0.0;
  BlowupReason reason = BlowupReason::nonfinite;
  Field last_good_field;
  std::optional<BlowupFit> fit;
};

struct TrajectorySample {
  double t = 0.0;
  double grad_l2 = 0.0;
  double sup = 0.0;
  double mass = 0.0;
  std::optional<Field> field;
};

struct TrajectoryEvent {
  double t = 0.0;
  std::string kind;
  std::string detail;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<TrajectoryEvent> events;
  std::optional<BlowupEvent> blowup;
  Field final_field;
  bool reached_t_end = false;
};

// Least squares of log|grad u| against log(T*-t) over the trailing decade
// of growth, with T* found by nested search.
std::optional<BlowupFit> fit_blowup_rate(const std::vector<TrajectorySample>& samples,
                                         double t_detect);

class SpectralSolver {
 public:
  using Observer = std::function<void(const Field&, const TrajectorySample&)>;

  SpectralSolver(GridPtr grid, SolverConfig cfg);

  const SolverConfig& config() const { return cfg_; }
  const GridPtr& grid() const { return grid_; }

  // One step of the chosen scheme; time stamp advanced by dt.
  Field step(const Field& f, double dt);

  // Advection-bound step estimate, clipped to [dt_min, dt_max]; the
  // exactly integrated linear part imposes no constraint.
  double estimate_dt(const Field& f) const;

  Trajectory evolve(const Field& f0, const std::vector<Observer>& observers = {});

 private:
  struct SchemeCoeffs {
    std::vector<std::complex<double>> e_full, e_half;       // if_rk4
    std::vector<std::complex<double>> q, f1, f2, f3;        // etd_rk4
  };

  void nonlinear(const Spectrum& c, Spectrum& out);
  void step_spectrum(Spectrum& c, double dt);
  const SchemeCoeffs& coeffs_for(double dt);
  double quantized_dt(double bound) const;

  GridPtr grid_;
  SolverConfig cfg_;
  int padded_n_;
  int keep_bins_;  // modes kept by the two-thirds mask
  std::map<double, SchemeCoeffs> coeff_cache_;
  // work buffers
  std::vector<double> u_pad_;
  Spectrum c_pad_;
  Spectrum nl_a_, nl_b_, nl_c_, nl_d_, stage_, etd_a_;
};

}  // namespace gkdv
