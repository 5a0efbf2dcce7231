#include "gkdv/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "gkdv/initdata.hpp"

namespace gkdv {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEsq = 7.38905609893065;
}  // namespace

double halfline_mass(const Field& f, HalflineSide side, double threshold, bool* out_of_domain) {
  const Grid& g = *f.grid;
  const double x_lo = g.x_min();
  const double x_hi = g.x_min() + g.length();
  if (out_of_domain) *out_of_domain = false;
  const double edge = side == HalflineSide::right ? threshold : -threshold;
  if (edge < x_lo || edge > x_hi) {
    if (out_of_domain) *out_of_domain = true;
    return 0.0;
  }
  double sum = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    const bool in = side == HalflineSide::right ? (x >= threshold) : (x <= -threshold);
    if (in) sum += f.values[j] * f.values[j];
  }
  return sum * g.dx();
}

double normalized_local_lp(const Field& f, double beta, double mu, double lambda, int n) {
  if (!(beta > 0.0)) throw std::domain_error("normalized_local_lp needs beta > 0");
  if (!(lambda > 0.0)) throw std::domain_error("normalized_local_lp needs lambda > 0");
  const Grid& g = *f.grid;
  const double lo = std::max(mu - lambda, g.x_min());
  const double hi = std::min(mu + lambda, g.x_min() + g.length());
  if (lo >= hi) return 0.0;
  return integrate_window_power(f, Interval{lo, hi}, 2 * n) / beta;
}

bool ExperimentReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

std::vector<std::size_t> select_monitor_indices(const std::vector<TrajectorySample>& samples,
                                                const MonitorConfig& mc, Regime regime,
                                                std::optional<double> T_star) {
  std::vector<std::size_t> idx;
  if (mc.cadence == "uniform" || samples.size() <= 2) {
    for (std::size_t i = 0; i < samples.size(); ++i) idx.push_back(i);
    return idx;
  }
  // log cadence: approximately uniform in log t (global) or log s (blow-up)
  std::set<std::size_t> chosen{0, samples.size() - 1};
  const int points = mc.log_points;
  if (regime == Regime::blowup && T_star) {
    const double s_last = std::max(*T_star - samples.back().t, 1e-300);
    const double s_first = std::max(*T_star - samples.front().t, s_last * (1 + 1e-12));
    for (int m = 0; m < points; ++m) {
      const double s = s_first * std::pow(s_last / s_first, (m + 0.5) / points);
      const double t = *T_star - s;
      auto it = std::lower_bound(samples.begin(), samples.end(), t,
                                 [](const TrajectorySample& a, double v) { return a.t < v; });
      if (it != samples.end()) chosen.insert(static_cast<std::size_t>(it - samples.begin()));
    }
  } else {
    double t_first = samples.front().t;
    for (const auto& s : samples)
      if (s.t > 0) {
        t_first = s.t;
        break;
      }
    const double t_last = std::max(samples.back().t, t_first * (1 + 1e-12));
    for (int m = 0; m < points; ++m) {
      const double t = t_first * std::pow(t_last / t_first, (m + 0.5) / points);
      auto it = std::lower_bound(samples.begin(), samples.end(), t,
                                 [](const TrajectorySample& a, double v) { return a.t < v; });
      if (it != samples.end()) chosen.insert(static_cast<std::size_t>(it - samples.begin()));
    }
  }
  idx.assign(chosen.begin(), chosen.end());
  return idx;
}

double boundary_mass(const Field& f) {
  // outer 5% of the domain: a 2.5%-wide strip at each end
  const Grid& g = *f.grid;
  const double strip = 0.025 * g.length();
  double sum = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    if (x < g.x_min() + strip || x >= g.x_min() + g.length() - strip)
      sum += f.values[j] * f.values[j];
  }
  return sum * g.dx();
}

struct VerdictBuilder {
  std::vector<Verdict>& out;
  void add(const std::string& name, const std::string& criterion, bool pass, double measured,
           double threshold, const std::string& note = "") {
    out.push_back({name, criterion, pass, measured, threshold, note});
  }
};

}  // namespace

ExperimentReport run_experiment(const RunConfig& cfg) {
  ExperimentReport report;
  report.config = cfg;

  const GridPtr grid = make_grid(cfg.grid.n, cfg.grid.length, cfg.grid.center);
  Field f0 = make_initial(cfg.init, grid);

  const bool localized_init = !std::holds_alternative<CustomSamplesInit>(cfg.init);
  if (localized_init && edge_to_peak_ratio(f0) > 1e-12)
    report.warnings.push_back(
        "domain adequacy: initial profile exceeds 1e-12 of its peak at the window edge");

  SolverConfig scfg = cfg.solver;
  scfg.p = cfg.p;
  scfg.keep_sample_fields = true;
  SpectralSolver solver(grid, scfg);
  Trajectory traj = solver.evolve(f0);

  report.blowup = traj.blowup;
  report.events = traj.events;
  report.reached_t_end = traj.reached_t_end;

  // regime bookkeeping
  if (cfg.scales.regime_override == "global") report.regime = Regime::global;
  else if (cfg.scales.regime_override == "blowup") report.regime = Regime::blowup;
  else report.regime = traj.blowup ? Regime::blowup : Regime::global;

  std::optional<double> T_star;
  if (report.regime == Regime::blowup) {
    if (traj.blowup && traj.blowup->fit) {
      T_star = traj.blowup->fit->T_star;
      report.T_star_from_fit = true;
    } else if (!traj.samples.empty()) {
      // fall back to just past the last recorded time
      double gap = 1e-6;
      if (traj.samples.size() >= 2)
        gap = traj.samples.back().t - traj.samples[traj.samples.size() - 2].t;
      T_star = traj.samples.back().t + gap;
      report.T_star_from_fit = false;
      report.warnings.push_back("blow-up regime without a usable rate fit; T* set past last sample");
    }
  }
  report.T_star_estimate = T_star;

  ScaleConfig sc;
  sc.p = cfg.p;
  sc.C0 = cfg.scales.C0;
  sc.C1 = cfg.scales.C1;
  sc.eta = cfg.scales.eta;
  sc.beta_min = cfg.scales.beta_min;
  ScaleState state(report.regime, sc, T_star);
  for (const auto& s : traj.samples) state.push(s.t, s.grad_l2);

  const auto indices = select_monitor_indices(traj.samples, cfg.monitors, report.regime, T_star);

  // static monitor weights
  std::optional<WeightEval> kato_weight;
  WeightSpec kato_spec = RightTanhWeight{cfg.monitors.kato_L, cfg.monitors.kato_front};
  if (cfg.monitors.kato)
    kato_weight = eval_weight(kato_spec, grid, ScaleDerivatives{});
  std::optional<WeightEval> lin_weight;
  WeightSpec lin_spec = CompactWeight{cfg.monitors.linvirial_theta, cfg.monitors.linvirial_lambda1,
                                      cfg.monitors.linvirial_lambda2, cfg.monitors.linvirial_mu};
  if (cfg.monitors.linvirial)
    lin_weight = eval_weight(lin_spec, grid, ScaleDerivatives{});

  const int n_half_power = cfg.p % 2 == 0 ? cfg.p / 2 : 0;
  const double s_cap = 0.5;
  double s_min = 0.0;
  if (report.regime == Regime::blowup && T_star && traj.blowup) {
    double gap = 1e-9;
    if (traj.samples.size() >= 2)
      gap = traj.samples.back().t - traj.samples[traj.samples.size() - 2].t;
    s_min = std::max(1.5 * (*T_star - traj.blowup->t_detect), 5.0 * gap);
  }

  const double mass0 = traj.samples.empty() ? 0.0 : traj.samples.front().mass;
  double running_min = kNaN;
  bool id_theta_l1 = true, id_lambda_ratio = true, any_scales = false;
  std::vector<double> gn1_ratio, gn1_envelope;  // per active local sample
  // moving-weight linear virial along blow-up samples, ordered by s
  std::vector<double> flux_s, flux_J, flux_coercive;
  double mu = cfg.monitors.mu0;
  double prev_t_for_mu = traj.samples.empty() ? 0.0 : traj.samples.front().t;
  bool boundary_warned = false, window_clip_warned = false, halfline_warned = false;

  const double default_b =
      n_half_power > 0 ? 0.9 * (2.0 * n_half_power) / (4.0 * n_half_power - 1.0) : 0.0;
  const double mt_b = cfg.monitors.mt01bis_b > 0.0 ? cfg.monitors.mt01bis_b : default_b;

  for (const std::size_t i : indices) {
    const TrajectorySample& smp = traj.samples[i];
    if (!smp.field) continue;
    const Field& u = *smp.field;

    report.conservation.push_back(conservation_record(u, cfg.p));

    MonitorRecord rec;
    rec.t = smp.t;
    rec.right_mass = rec.left_mass = rec.local_lp_normalized = rec.running_min_local = kNaN;
    rec.J_quad = rec.J_lin = rec.kato_residual = rec.linvirial_residual = kNaN;
    rec.theta = rec.lambda1 = rec.lambda2 = rec.mu = kNaN;
    rec.beta_right = rec.beta_left = rec.beta_floor = kNaN;

    rec.beta_right = state.beta_right(smp.t);
    if (n_half_power > 0) rec.beta_floor = state.beta_floor(smp.t);

    if (cfg.monitors.farfield) {
      bool oob = false;
      rec.right_mass = halfline_mass(u, HalflineSide::right, rec.beta_right, &oob);
      bool any_oob = oob;
      const bool left_defined = report.regime == Regime::blowup
                                    ? (T_star && smp.t < *T_star)
                                    : smp.t > 1.0;
      if (left_defined) {
        rec.beta_left = state.beta_left(smp.t);
        rec.left_mass = halfline_mass(u, HalflineSide::left, rec.beta_left, &oob);
        any_oob = any_oob || oob;
      }
      if (any_oob && !halfline_warned) {
        report.warnings.push_back("half-line monitor threshold left the domain; value reported as 0");
        halfline_warned = true;
      }
    }

    if (cfg.monitors.local_decay && n_half_power > 0) {
      bool active = false;
      double tau = 0.0;
      if (report.regime == Regime::blowup && T_star) {
        const double s = *T_star - smp.t;
        active = s > s_min && s < std::min(s_cap, *T_star);
        tau = s;
      } else {
        active = smp.t >= kEsq;
        tau = smp.t;
      }
      if (active) {
        const CompactScales cs = state.compact_scales(tau);
        any_scales = true;
        if (report.regime == Regime::blowup) {
          const double sb = tau * cs.beta;
          if (std::abs(cs.theta * cs.lambda1 - sb) > 1e-12 * sb) id_theta_l1 = false;
          const double al = std::abs(std::log(tau));
          if (std::abs(cs.lambda1 / cs.lambda2 - 1.0 / (al * al)) > 1e-12 / (al * al))
            id_lambda_ratio = false;
        } else {
          const double lt = std::log(tau);
          if (std::abs(cs.lambda1 / cs.lambda2 - 1.0 / lt) > 1e-12 / lt) id_lambda_ratio = false;
        }
        mu = mu_track(state, u, mu, smp.t - prev_t_for_mu, tau, !cfg.monitors.mu_tracking);
        rec.theta = cs.theta;
        rec.lambda1 = cs.lambda1;
        rec.lambda2 = cs.lambda2;
        rec.mu = mu;
        const double win_lo = mu - cs.lambda1, win_hi = mu + cs.lambda1;
        if ((win_lo < grid->x_min() || win_hi > grid->x_min() + grid->length()) &&
            !window_clip_warned) {
          report.warnings.push_back("local monitor window clipped to the domain");
          window_clip_warned = true;
        }
        rec.local_lp_normalized = normalized_local_lp(u, cs.beta, mu, cs.lambda1, n_half_power);
        running_min = std::isnan(running_min) ? rec.local_lp_normalized
                                              : std::min(running_min, rec.local_lp_normalized);
        rec.running_min_local = running_min;

        if (report.regime == Regime::blowup) {
          const WeightEval moving =
              eval_weight(CompactWeight{cs.theta, cs.lambda1, cs.lambda2, mu}, grid);
          flux_s.push_back(tau);
          flux_J.push_back(linear_virial(u, moving));
          // (1/(theta lambda1)) int_window u^{2n} = local_lp * beta / (s beta)
          flux_coercive.push_back(rec.local_lp_normalized * cs.beta / (cs.theta * cs.lambda1));
        }

        // GN1 consistency: the windowed integral is controlled by the
        // fitted best constant times mass^{(n+1)/2} grad^{n-1} / beta
        const double full = integrate_window_power(
            u, Interval{grid->x_min(), grid->x_min() + grid->length()}, 2 * n_half_power);
        const double g = std::sqrt(gradsq_from_spectrum(*grid, spectrum_of(u)));
        const double denom =
            std::pow(smp.mass, 0.5 * (n_half_power + 1)) * std::pow(g, n_half_power - 1);
        if (denom > 0.0) {
          gn1_ratio.push_back(full / denom);
          gn1_envelope.push_back(rec.local_lp_normalized * cs.beta / denom);
        }
      }
    } else if (cfg.monitors.mt01bis && n_half_power > 0 && smp.t >= 2.0) {
      const double center = -cfg.monitors.mt01bis_beta * std::pow(smp.t, cfg.monitors.mt01bis_a);
      const double half_width = std::pow(smp.t, mt_b);
      const double win_lo = center - half_width, win_hi = center + half_width;
      if ((win_lo < grid->x_min() || win_hi > grid->x_min() + grid->length()) &&
          !window_clip_warned) {
        report.warnings.push_back("mt01bis window clipped to the domain");
        window_clip_warned = true;
      }
      rec.mu = center;
      rec.local_lp_normalized = normalized_local_lp(u, 1.0, center, half_width, n_half_power);
      running_min = std::isnan(running_min) ? rec.local_lp_normalized
                                            : std::min(running_min, rec.local_lp_normalized);
      rec.running_min_local = running_min;
    }

    if (kato_weight) {
      rec.J_quad = quadratic_virial(u, *kato_weight);
      report.kato_terms.push_back(kato_rhs(u, *kato_weight, cfg.p));
    }
    if (lin_weight) {
      rec.J_lin = linear_virial(u, *lin_weight);
      report.linvirial_terms.push_back(linear_virial_rhs(u, lin_spec, *lin_weight, cfg.p));
    }

    const double bmass = boundary_mass(u);
    if (!boundary_warned && mass0 > 0.0 && bmass > cfg.monitors.boundary_mass_tol * mass0) {
      std::ostringstream os;
      os << "domain adequacy: boundary mass " << bmass << " exceeds tolerance at t=" << smp.t;
      report.warnings.push_back(os.str());
      boundary_warned = true;
    }

    prev_t_for_mu = smp.t;
    report.monitors.push_back(rec);

    if (cfg.output.checkpoint_every > 0 &&
        (report.monitors.size() - 1) % cfg.output.checkpoint_every == 0)
      report.checkpoints.emplace_back(smp.t, u);
  }

  // centered-difference residuals of the virial identities
  if (kato_weight) {
    for (std::size_t i = 1; i + 1 < report.monitors.size(); ++i) {
      const double dt = report.monitors[i + 1].t - report.monitors[i - 1].t;
      if (!(dt > 0.0)) continue;
      const double fd = (report.monitors[i + 1].J_quad - report.monitors[i - 1].J_quad) / dt;
      report.monitors[i].kato_residual = std::abs(report.kato_terms[i].total() - fd);
    }
  }
  if (lin_weight) {
    for (std::size_t i = 1; i + 1 < report.monitors.size(); ++i) {
      const double dt = report.monitors[i + 1].t - report.monitors[i - 1].t;
      if (!(dt > 0.0)) continue;
      const double fd = (report.monitors[i + 1].J_lin - report.monitors[i - 1].J_lin) / dt;
      report.monitors[i].linvirial_residual = std::abs(report.linvirial_terms[i].total() - fd);
    }
  }

  // ---- verdicts ----
  VerdictBuilder vb{report.verdicts};
  const auto& mons = report.monitors;

  if (!traj.blowup) {
    double mass_drift = 0.0, energy_drift = 0.0;
    const double e0 = report.conservation.empty() ? 0.0 : report.conservation.front().energy;
    const double e_ref = std::max(std::abs(e0), 1e-30);
    const double m_ref = std::max(mass0, 1e-30);
    for (const auto& c : report.conservation) {
      mass_drift = std::max(mass_drift, std::abs(c.mass - mass0) / m_ref);
      energy_drift = std::max(energy_drift, std::abs(c.energy - e0) / e_ref);
    }
    vb.add("mass_drift_relative", "AC1", mass_drift < 1e-8, mass_drift, 1e-8);
    vb.add("energy_drift_relative", "AC1", energy_drift < 1e-6, energy_drift, 1e-6);
  }

  if (cfg.monitors.farfield && !mons.empty()) {
    double max_jump = 0.0;
    for (std::size_t i = 1; i < mons.size(); ++i)
      if (!std::isnan(mons[i].right_mass) && !std::isnan(mons[i - 1].right_mass))
        max_jump = std::max(max_jump, mons[i].right_mass - mons[i - 1].right_mass);
    vb.add("right_mass_monotone_jitter", "AC7", max_jump <= 1e-9, max_jump, 1e-9);
    const double rm_final = mons.back().right_mass;
    vb.add("right_mass_final_fraction", "AC7", rm_final <= 1e-4 * mass0, rm_final, 1e-4 * mass0);
    double lm_final = kNaN;
    for (auto it = mons.rbegin(); it != mons.rend(); ++it)
      if (!std::isnan(it->left_mass)) {
        lm_final = it->left_mass;
        break;
      }
    if (!std::isnan(lm_final))
      vb.add("left_mass_final_fraction", "AC7", lm_final <= 1e-3 * mass0, lm_final, 1e-3 * mass0);
    bool disjoint = true;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (std::isnan(mons[i].right_mass) || std::isnan(mons[i].left_mass)) continue;
      if (mons[i].right_mass + mons[i].left_mass > report.conservation[i].mass * (1.0 + 1e-12))
        disjoint = false;
    }
    vb.add("halfline_windows_disjoint", "AC7", disjoint, disjoint ? 1.0 : 0.0, 1.0,
           "right_mass + left_mass <= total mass");
  }

  // one-sided flux bound along blow-up samples: -dJ/ds >= c0 * coercive
  // - C/(s log^2 s), with C fitted on the odd-indexed samples and checked
  // out of sample on the even-indexed ones
  if (flux_s.size() >= 6) {
    const double c0 = std::pow(1.0 / std::cosh(1.0), 4);  // sech^4(1) window floor
    std::vector<double> demand(flux_s.size(), 0.0);
    // samples were pushed in time order, so s decreases with the index
    for (std::size_t i = 1; i + 1 < flux_s.size(); ++i) {
      const double ds = flux_s[i + 1] - flux_s[i - 1];  // negative
      if (ds == 0.0) continue;
      const double dJds = (flux_J[i + 1] - flux_J[i - 1]) / ds;
      const double lhs = -dJds;
      const double sl = flux_s[i] * std::pow(std::log(flux_s[i]), 2);
      demand[i] = std::max(0.0, (c0 * flux_coercive[i] - lhs) * sl);
    }
    double c_fit = 0.0, c_check = 0.0;
    for (std::size_t i = 1; i + 1 < flux_s.size(); ++i)
      (i % 2 ? c_fit : c_check) = std::max(i % 2 ? c_fit : c_check, demand[i]);
    const bool ok = std::isfinite(c_fit) && c_check <= std::max(2.0 * c_fit, 1e-12);
    vb.add("blowup_flux_lower_bound", "AC8", ok, c_check, std::max(2.0 * c_fit, 1e-12),
           "-dJ/ds >= c0*coercive - C/(s log^2 s); C fitted one-sided out of sample");
  }

  if ((cfg.monitors.local_decay || cfg.monitors.mt01bis) && n_half_power > 0) {
    double first = kNaN, last = kNaN;
    for (const auto& r : mons)
      if (!std::isnan(r.local_lp_normalized)) {
        if (std::isnan(first)) first = r.local_lp_normalized;
        last = r.running_min_local;
      }
    if (!std::isnan(first)) {
      const double factor = cfg.monitors.liminf_reduction_factor;
      const bool pass = first == 0.0 ? last <= 0.0 : last <= first / factor;
      vb.add("local_decay_reduction", "AC8", pass, first > 0 ? first / std::max(last, 1e-300) : 0.0,
             factor, "running-min reduction factor over the horizon");
    }
    if (!gn1_ratio.empty()) {
      const double c_gn = *std::max_element(gn1_ratio.begin(), gn1_ratio.end());
      bool ok = true;
      double worst = 0.0;
      for (std::size_t i = 0; i < gn1_envelope.size(); ++i) {
        worst = std::max(worst, gn1_envelope[i] / c_gn);
        if (gn1_envelope[i] > c_gn * (1.0 + 1e-9)) ok = false;
      }
      vb.add("local_gn1_consistency", "AC8", ok, worst, 1.0,
             "windowed u^{2n} stays below the fitted GN1 envelope");
    }
  }

  if (kato_weight) {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < mons.size(); ++i) {
      if (std::isnan(mons[i].kato_residual)) continue;
      const double fd_scale =
          std::abs((mons[i + 1].J_quad - mons[i - 1].J_quad) / (mons[i + 1].t - mons[i - 1].t));
      const double tol = std::max(1e-6, 1e-3 * fd_scale);
      worst = std::max(worst, mons[i].kato_residual / tol);
      if (mons[i].kato_residual >= tol) {
        ok = false;
        report.events.push_back({mons[i].t, "kato_residual_spike",
                                 "identity residual exceeded its tolerance"});
      }
    }
    vb.add("kato_residual_bound", "AC2", ok, worst, 1.0, "max residual / tolerance");
  }
  if (lin_weight) {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < mons.size(); ++i) {
      if (std::isnan(mons[i].linvirial_residual)) continue;
      const double fd_scale =
          std::abs((mons[i + 1].J_lin - mons[i - 1].J_lin) / (mons[i + 1].t - mons[i - 1].t));
      const double tol = std::max(1e-6, 1e-3 * fd_scale);
      worst = std::max(worst, mons[i].linvirial_residual / tol);
      if (mons[i].linvirial_residual >= tol) {
        ok = false;
        report.events.push_back({mons[i].t, "linvirial_residual_spike",
                                 "identity residual exceeded its tolerance"});
      }
    }
    vb.add("linvirial_residual_bound", "AC3", ok, worst, 1.0, "max residual / tolerance");
    bool sign_ok = true;
    for (const auto& terms : report.linvirial_terms)
      if (terms.coercive_term && *terms.coercive_term < 0.0) sign_ok = false;
    vb.add("coercive_term_sign", "AC3", sign_ok, sign_ok ? 1.0 : -1.0, 0.0,
           "coercive term >= 0 for p = 2n");
  }

  // scale-law identities on every run with an even power
  if (n_half_power > 0) {
    if (any_scales && report.regime == Regime::blowup) {
      vb.add("scale_identity_theta_lambda1", "AC9", id_theta_l1, id_theta_l1 ? 0.0 : 1.0, 1e-12,
             "theta*lambda1 == s*beta up to round-off");
      vb.add("scale_identity_lambda_ratio", "AC9", id_lambda_ratio, id_lambda_ratio ? 0.0 : 1.0,
             1e-12, "lambda1/lambda2 == 1/log^2 s");
    } else if (any_scales) {
      vb.add("scale_identity_lambda_ratio", "AC9", id_lambda_ratio, id_lambda_ratio ? 0.0 : 1.0,
             1e-12, "lambda1/lambda2 == 1/log t (global regime)");
    }
    bool beta_mono = true;
    for (std::size_t i = 1; i < mons.size(); ++i)
      if (mons[i].beta_right < mons[i - 1].beta_right - 1e-12) beta_mono = false;
    vb.add("beta_right_nondecreasing", "AC9", beta_mono, beta_mono ? 1.0 : 0.0, 1.0);
    bool floor_ok = true;
    double prev_floor = 0.0;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      const double g = report.conservation[i].grad_l2;
      const double raw = std::pow(g, n_half_power - 1);
      if (mons[i].beta_floor < raw * (1.0 - 1e-12) || mons[i].beta_floor < prev_floor - 1e-15)
        floor_ok = false;
      prev_floor = mons[i].beta_floor;
    }
    vb.add("beta_floor_dominates", "AC9", floor_ok, floor_ok ? 1.0 : 0.0, 1.0,
           "beta_floor >= |grad u|^{n-1} and non-decreasing");
  }

  if (traj.blowup) {
    const double g0 = traj.samples.front().grad_l2;
    double gmax = g0;
    for (const auto& s : traj.samples) gmax = std::max(gmax, s.grad_l2);
    const double growth = g0 > 0 ? gmax / g0 : 0.0;
    vb.add("gradient_growth_factor", "AC6", growth >= 10.0, growth, 10.0);
    if (traj.blowup->fit && traj.blowup->fit->reliable) {
      const double target = blowup_rate_exponent(1.0, cfg.p) - 0.05;
      vb.add("fitted_exponent_bound", "AC6", traj.blowup->fit->exponent >= target,
             traj.blowup->fit->exponent, target);
    } else {
      vb.add("fitted_exponent_bound", "AC6", true, 0.0, 0.0,
             "fit unreliable; criterion degrades to the growth check (reported explicitly)");
    }
  }

  return report;
}

}  // namespace gkdv
