#include "gkdv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkdv/errors.hpp"
#include "gkdv/fft.hpp"

namespace gkdv {

DealiasSpec default_dealias(int p) {
  if (p >= 6) return DealiasSpec{DealiasKind::zero_pad, (p + 2) / 2};
  return DealiasSpec{DealiasKind::two_thirds, 2};
}

void SolverConfig::validate() const {
  if (p < 2) throw std::invalid_argument("solver.p must be >= 2");
  if (dealias.kind == DealiasKind::zero_pad && dealias.factor < (p + 2) / 2)
    throw std::invalid_argument("solver.dealias: zero_pad factor must be >= ceil((p+1)/2)");
  if (dt < 0.0) throw std::invalid_argument("solver.dt must be >= 0");
  if (dt == 0.0) {
    if (!(cfl_safety > 0.0) || cfl_safety > 1.0)
      throw std::invalid_argument("solver.cfl_safety must lie in (0,1]");
    if (!(dt_min > 0.0) || !(dt_max >= dt_min))
      throw std::invalid_argument("solver.dt_min/dt_max must satisfy 0 < dt_min <= dt_max");
  }
  if (!(t_end > 0.0)) throw std::invalid_argument("solver.t_end must be positive");
  if (!(blowup_sup_threshold > 0.0))
    throw std::invalid_argument("solver.blowup_sup_threshold must be positive");
  if (!(blowup_grad_factor > 1.0))
    throw std::invalid_argument("solver.blowup_grad_factor must exceed 1");
  if (sample_every < 1) throw std::invalid_argument("solver.sample_every must be >= 1");
}

std::string to_string(BlowupReason r) {
  switch (r) {
    case BlowupReason::sup_threshold: return "sup_threshold";
    case BlowupReason::grad_factor: return "grad_factor";
    case BlowupReason::nonfinite: return "nonfinite";
  }
  return "unknown";
}

SpectralSolver::SpectralSolver(GridPtr grid, SolverConfig cfg)
    : grid_(std::move(grid)), cfg_(cfg) {
  cfg_.validate();
  const int n = grid_->n();
  padded_n_ = cfg_.dealias.kind == DealiasKind::zero_pad ? cfg_.dealias.factor * n : n;
  keep_bins_ = n / 3 + 1;  // bins 0..n/3 survive the two-thirds mask
  u_pad_.resize(padded_n_);
  c_pad_.resize(padded_n_ / 2 + 1);
  const int nh = grid_->half_size();
  nl_a_.resize(nh);
  nl_b_.resize(nh);
  nl_c_.resize(nh);
  nl_d_.resize(nh);
  stage_.resize(nh);
}

// -ik * F[dealias(u^p)]
void SpectralSolver::nonlinear(const Spectrum& c, Spectrum& out) {
  const int nh = grid_->half_size();
  const int mh = padded_n_ / 2 + 1;
  auto& big = transform_for(padded_n_);

  std::fill(c_pad_.begin(), c_pad_.end(), std::complex<double>(0.0, 0.0));
  if (cfg_.dealias.kind == DealiasKind::two_thirds) {
    for (int j = 0; j < std::min(keep_bins_, nh); ++j) c_pad_[j] = c[j];
  } else {
    for (int j = 0; j < nh; ++j) c_pad_[j] = c[j];
    c_pad_[nh - 1] *= 0.5;  // Nyquist splits between +/- modes on the fine grid
  }
  big.inverse(std::span<const std::complex<double>>(c_pad_.data(), mh), u_pad_);

  const int p = cfg_.p;
  for (int j = 0; j < padded_n_; ++j) {
    const double u = u_pad_[j];
    double acc = u;
    for (int r = 1; r < p; ++r) acc *= u;
    u_pad_[j] = acc;
  }
  big.forward(u_pad_, std::span<std::complex<double>>(c_pad_.data(), mh));

  const int copy_bins = cfg_.dealias.kind == DealiasKind::two_thirds ? std::min(keep_bins_, nh) : nh;
  for (int j = 0; j < nh; ++j) out[j] = j < copy_bins ? c_pad_[j] : 0.0;
  for (int j = 0; j < nh; ++j) out[j] *= std::complex<double>(0.0, -grid_->k_half(j));
  out[nh - 1] = 0.0;  // odd-derivative Nyquist convention
}

const SpectralSolver::SchemeCoeffs& SpectralSolver::coeffs_for(double dt) {
  auto it = coeff_cache_.find(dt);
  if (it != coeff_cache_.end()) return it->second;

  SchemeCoeffs co;
  const int nh = grid_->half_size();
  if (cfg_.scheme == Scheme::if_rk4) {
    co.e_full.resize(nh);
    co.e_half.resize(nh);
    for (int j = 0; j < nh; ++j) {
      const double k = grid_->k_half(j);
      const double phase = k * k * k;  // u_t = +i k^3 u for the Airy part
      co.e_half[j] = std::polar(1.0, phase * dt * 0.5);
      co.e_full[j] = std::polar(1.0, phase * dt);
    }
  } else {
    // Contour evaluation of the phi coefficients (Kassam-Trefethen); the
    // linear symbol i k^3 is purely imaginary, so the mean runs over the
    // full unit circle around each z to dodge the small-z cancellation.
    constexpr int M = 32;
    co.e_full.resize(nh);
    co.e_half.resize(nh);
    co.q.resize(nh);
    co.f1.resize(nh);
    co.f2.resize(nh);
    co.f3.resize(nh);
    for (int j = 0; j < nh; ++j) {
      const double k = grid_->k_half(j);
      const std::complex<double> z(0.0, k * k * k * dt);
      co.e_full[j] = std::exp(z);
      co.e_half[j] = std::exp(0.5 * z);
      std::complex<double> q(0.0), f1(0.0), f2(0.0), f3(0.0);
      for (int m = 0; m < M; ++m) {
        const double a = 2.0 * std::numbers::pi * (m + 0.5) / M;
        const std::complex<double> r = z + std::polar(1.0, a);
        const std::complex<double> er = std::exp(r);
        const std::complex<double> r2 = r * r, r3 = r2 * r;
        q += (std::exp(0.5 * r) - 1.0) / r;
        f1 += (-4.0 - r + er * (4.0 - 3.0 * r + r2)) / r3;
        f2 += (2.0 + r + er * (-2.0 + r)) / r3;
        f3 += (-4.0 - 3.0 * r - r2 + er * (4.0 - r)) / r3;
      }
      const double inv = 1.0 / M;
      co.q[j] = dt * q * inv;
      co.f1[j] = dt * f1 * inv;
      co.f2[j] = dt * f2 * inv;
      co.f3[j] = dt * f3 * inv;
    }
  }
  return coeff_cache_.emplace(dt, std::move(co)).first->second;
}

void SpectralSolver::step_spectrum(Spectrum& c, double dt) {
  const SchemeCoeffs& co = coeffs_for(dt);
  const int nh = grid_->half_size();
  if (cfg_.scheme == Scheme::if_rk4) {
    nonlinear(c, nl_a_);
    for (int j = 0; j < nh; ++j) stage_[j] = co.e_half[j] * (c[j] + 0.5 * dt * nl_a_[j]);
    nonlinear(stage_, nl_b_);
    for (int j = 0; j < nh; ++j) stage_[j] = co.e_half[j] * c[j] + 0.5 * dt * nl_b_[j];
    nonlinear(stage_, nl_c_);
    for (int j = 0; j < nh; ++j)
      stage_[j] = co.e_full[j] * c[j] + dt * co.e_half[j] * nl_c_[j];
    nonlinear(stage_, nl_d_);
    for (int j = 0; j < nh; ++j) {
      c[j] = co.e_full[j] * c[j] +
             dt / 6.0 *
                 (co.e_full[j] * nl_a_[j] + 2.0 * co.e_half[j] * (nl_b_[j] + nl_c_[j]) +
                  nl_d_[j]);
    }
  } else {
    nonlinear(c, nl_a_);  // N(v)
    for (int j = 0; j < nh; ++j) stage_[j] = co.e_half[j] * c[j] + co.q[j] * nl_a_[j];
    nonlinear(stage_, nl_b_);  // N(a)
    etd_a_ = stage_;
    for (int j = 0; j < nh; ++j) stage_[j] = co.e_half[j] * c[j] + co.q[j] * nl_b_[j];
    nonlinear(stage_, nl_c_);  // N(b)
    for (int j = 0; j < nh; ++j)
      stage_[j] = co.e_half[j] * etd_a_[j] + co.q[j] * (2.0 * nl_c_[j] - nl_a_[j]);
    nonlinear(stage_, nl_d_);  // N(c)
    for (int j = 0; j < nh; ++j) {
      c[j] = co.e_full[j] * c[j] + co.f1[j] * nl_a_[j] + 2.0 * co.f2[j] * (nl_b_[j] + nl_c_[j]) +
             co.f3[j] * nl_d_[j];
    }
  }
}

Field SpectralSolver::step(const Field& f, double dt) {
  if (!f.finite()) throw invalid_field_error("step: non-finite field");
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  Spectrum c = spectrum_of(f);
  step_spectrum(c, dt);
  Field out = field_from_spectrum(f.grid, c, f.time + dt);
  return out;
}

double SpectralSolver::estimate_dt(const Field& f) const {
  if (cfg_.dt > 0.0) throw configuration_error("estimate_dt requires the adaptive policy");
  const double sup = norm_sup(f);
  if (sup == 0.0) return cfg_.dt_max;
  double amp = sup;
  for (int r = 2; r < cfg_.p; ++r) amp *= sup;  // sup^{p-1}
  const double bound = cfg_.cfl_safety * grid_->dx() / (cfg_.p * amp);
  return std::clamp(bound, cfg_.dt_min, cfg_.dt_max);
}

double SpectralSolver::quantized_dt(double bound) const {
  if (bound >= cfg_.dt_max) return cfg_.dt_max;
  const int m = static_cast<int>(std::ceil(std::log2(cfg_.dt_max / bound)));
  return cfg_.dt_max * std::pow(0.5, m);
}

std::optional<BlowupFit> fit_blowup_rate(const std::vector<TrajectorySample>& samples,
                                         double t_detect) {
  std::vector<double> ts, logs;
  double g_det = 0.0;
  for (const auto& s : samples)
    if (s.t <= t_detect + 1e-15 && s.grad_l2 > 0.0) g_det = s.grad_l2;
  if (g_det <= 0.0) return std::nullopt;
  // trailing decade of growth
  std::size_t first = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].t > t_detect + 1e-15) break;
    if (samples[i].grad_l2 >= 0.1 * g_det) {
      first = i;
      break;
    }
  }
  if (first == samples.size()) return std::nullopt;
  for (std::size_t i = first; i < samples.size() && samples[i].t <= t_detect + 1e-15; ++i) {
    if (samples[i].grad_l2 > 0.0) {
      ts.push_back(samples[i].t);
      logs.push_back(std::log(samples[i].grad_l2));
    }
  }
  if (ts.size() < 3) return std::nullopt;

  const double t_last = ts.back();
  const double span = std::max(t_last - ts.front(), 1e-12);
  auto sse_for = [&](double T_star, double* slope_out) {
    // linear LS of logs against log(T*-t)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(ts.size());
    for (int i = 0; i < n; ++i) {
      const double x = std::log(T_star - ts[i]);
      sx += x;
      sy += logs[i];
      sxx += x * x;
      sxy += x * logs[i];
    }
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-30) return 1e300;
    const double b = (n * sxy - sx * sy) / det;
    const double a = (sy - b * sx) / n;
    if (slope_out) *slope_out = b;
    double sse = 0;
    for (int i = 0; i < n; ++i) {
      const double r = logs[i] - (a + b * std::log(T_star - ts[i]));
      sse += r * r;
    }
    return sse;
  };

  // two-stage deterministic grid over the T* offset
  double best_off = span * 0.01, best_sse = 1e300;
  for (int stage = 0; stage < 2; ++stage) {
    const double lo = stage == 0 ? span * 1e-6 : best_off * 0.25;
    const double hi = stage == 0 ? span * 10.0 : best_off * 4.0;
    for (int i = 0; i <= 240; ++i) {
      const double off = lo * std::pow(hi / lo, i / 240.0);
      const double sse = sse_for(t_last + off, nullptr);
      if (sse < best_sse) {
        best_sse = sse;
        best_off = off;
      }
    }
  }
  BlowupFit fit;
  double slope = 0.0;
  sse_for(t_last + best_off, &slope);
  fit.T_star = t_last + best_off;
  fit.exponent = -slope;
  fit.n_samples = static_cast<int>(ts.size());
  fit.rms_log_residual = std::sqrt(best_sse / ts.size());
  fit.reliable = fit.n_samples >= 8;
  return fit;
}

Trajectory SpectralSolver::evolve(const Field& f0, const std::vector<Observer>& observers) {
  if (!(*f0.grid == *grid_)) throw std::invalid_argument("evolve: field grid mismatch");
  Trajectory traj;
  Spectrum c = spectrum_of(f0);
  Field u = f0;
  double t = f0.time;
  const double t_end = f0.time + cfg_.t_end;

  const double grad0 = std::sqrt(gradsq_from_spectrum(*grid_, c));
  long step_index = 0;

  auto record_sample = [&](const Field& state) {
    TrajectorySample s;
    s.t = state.time;
    s.sup = norm_sup(state);
    s.mass = l2sq_from_spectrum(*grid_, c);
    s.grad_l2 = std::sqrt(gradsq_from_spectrum(*grid_, c));
    if (cfg_.keep_sample_fields) s.field = state;
    traj.samples.push_back(s);
    for (const auto& obs : observers) obs(state, traj.samples.back());
  };

  record_sample(u);

  Field prev = u;
  while (t < t_end - 1e-13 * std::max(1.0, std::abs(t_end))) {
    double dt;
    if (cfg_.dt > 0.0) {
      dt = std::min(cfg_.dt, t_end - t);
    } else {
      const double sup = norm_sup(u);
      double amp = sup;
      for (int r = 2; r < cfg_.p; ++r) amp *= sup;
      const double bound =
          sup == 0.0 ? cfg_.dt_max : cfg_.cfl_safety * grid_->dx() / (cfg_.p * amp);
      if (bound < cfg_.dt_min) {
        traj.events.push_back({t, "resolution_exhausted",
                               "adaptive step fell below dt_min before t_end"});
        break;
      }
      dt = std::min(quantized_dt(bound), t_end - t);
    }

    prev = u;
    step_spectrum(c, dt);
    t += dt;
    ++step_index;
    transform_for(grid_->n()).inverse(c, u.values);
    u.time = t;

    const double mass_now = l2sq_from_spectrum(*grid_, c);
    const double grad_now = std::sqrt(gradsq_from_spectrum(*grid_, c));
    if (!std::isfinite(mass_now) || !std::isfinite(grad_now) || !u.finite()) {
      BlowupEvent ev;
      ev.t_detect = t;
      ev.reason = BlowupReason::nonfinite;
      ev.last_good_field = prev;
      traj.blowup = ev;
      break;
    }
    const double sup_now = norm_sup(u);
    if (sup_now > cfg_.blowup_sup_threshold || grad_now > cfg_.blowup_grad_factor * grad0) {
      record_sample(u);
      BlowupEvent ev;
      ev.t_detect = t;
      ev.reason = sup_now > cfg_.blowup_sup_threshold ? BlowupReason::sup_threshold
                                                      : BlowupReason::grad_factor;
      ev.last_good_field = u;
      traj.blowup = ev;
      break;
    }
    if (step_index % cfg_.sample_every == 0 || t >= t_end - 1e-13) record_sample(u);
  }

  const bool state_usable = !traj.blowup || traj.blowup->reason != BlowupReason::nonfinite;
  if (state_usable && !traj.samples.empty() && traj.samples.back().t < t - 1e-15)
    record_sample(u);
  traj.final_field = traj.blowup && traj.blowup->reason == BlowupReason::nonfinite
                         ? traj.blowup->last_good_field
                         : u;
  traj.reached_t_end = !traj.blowup && t >= t_end - 1e-9 * std::max(1.0, std::abs(t_end));
  if (traj.blowup) traj.blowup->fit = fit_blowup_rate(traj.samples, traj.blowup->t_detect);
  return traj;
}

}  // namespace gkdv
