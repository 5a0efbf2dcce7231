#include "gkdv/scales.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {
constexpr double kEsq = 7.38905609893065;  // e^2
}

ScaleState::ScaleState(Regime regime, ScaleConfig cfg, std::optional<double> T_star_estimate)
    : regime_(regime), cfg_(cfg), T_star_(T_star_estimate) {
  if (cfg_.p < 2) throw std::domain_error("scale state requires p >= 2");
  if (!(cfg_.eta > 0.0)) throw std::domain_error("eta must be positive");
  if (!(cfg_.C0 > 0.0) || !(cfg_.C1 > 0.0)) throw std::domain_error("C0, C1 must be positive");
  if (regime_ == Regime::blowup && T_star_ && !(*T_star_ > 0.0))
    throw std::domain_error("blow-up regime needs a positive T* estimate");
}

void ScaleState::set_T_star_estimate(double T_star) {
  if (!(T_star > 0.0)) throw std::domain_error("T* estimate must be positive");
  T_star_ = T_star;
}

void ScaleState::push(double t, double grad_l2) {
  if (!times_.empty() && t <= times_.back())
    throw std::invalid_argument("scale history must advance in time");
  if (!(grad_l2 >= 0.0)) throw std::invalid_argument("gradient norm must be >= 0");
  const double gpow = std::pow(grad_l2, 0.5 * (cfg_.p - 1));

  double integral = 0.0;
  if (!times_.empty()) {
    const double prev_gpow = std::pow(grads_.back(), 0.5 * (cfg_.p - 1));
    integral = integral_.back() + 0.5 * (gpow + prev_gpow) * (t - times_.back());
  }

  double floor_val = cfg_.beta_min;
  if (cfg_.p % 2 == 0) {
    const int n = cfg_.p / 2;
    const double raw = std::pow(grad_l2, n - 1);
    double prev = floor_.empty() ? cfg_.beta_min : floor_.back();
    // trailing average over the envelope window, then the running max
    const int w = std::max(1, cfg_.envelope_width);
    double avg = raw;
    {
      int cnt = 1;
      double acc = raw;
      for (int j = static_cast<int>(grads_.size()) - 1; j >= 0 && cnt < w; --j, ++cnt)
        acc += std::pow(grads_[j], n - 1);
      avg = acc / cnt;
    }
    floor_val = std::max({prev, raw, avg, cfg_.beta_min});
  }

  times_.push_back(t);
  grads_.push_back(grad_l2);
  integral_.push_back(integral);
  floor_.push_back(floor_val);
}

double ScaleState::t_front() const {
  if (times_.empty()) throw std::out_of_range("empty scale history");
  return times_.front();
}

double ScaleState::t_back() const {
  if (times_.empty()) throw std::out_of_range("empty scale history");
  return times_.back();
}

int ScaleState::index_at_or_before(double t) const {
  if (times_.empty()) throw std::out_of_range("empty scale history");
  const double slack = 1e-9 * std::max(1.0, std::abs(times_.back()));
  if (t < times_.front() - slack || t > times_.back() + slack)
    throw std::out_of_range("time outside the recorded gradient history");
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  return std::max(0, static_cast<int>(it - times_.begin()) - 1);
}

double ScaleState::grad_at(double t) const {
  const int i = index_at_or_before(t);
  if (i + 1 >= size() || times_[i] == t) return grads_[i];
  const double w = (t - times_[i]) / (times_[i + 1] - times_[i]);
  return (1.0 - w) * grads_[i] + w * grads_[i + 1];
}

double ScaleState::beta_right(double t) const {
  const int i = index_at_or_before(t);
  double integral = integral_[i];
  if (i + 1 < size() && t > times_[i]) {
    const double gpow_i = std::pow(grads_[i], 0.5 * (cfg_.p - 1));
    const double gpow_t = std::pow(grad_at(t), 0.5 * (cfg_.p - 1));
    integral += 0.5 * (gpow_i + gpow_t) * (t - times_[i]);
  }
  return cfg_.C0 * (t + integral);
}

double ScaleState::beta_left(double t) const {
  if (regime_ == Regime::blowup) {
    if (!T_star_) throw configuration_error("beta_left needs a T* estimate in blow-up regime");
    if (!(t < *T_star_)) throw std::domain_error("beta_left needs t < T*");
    const double s = *T_star_ - t;
    const double gpow = std::pow(grad_at(t), 0.5 * (cfg_.p - 1));
    return cfg_.C1 * gpow * s * std::pow(std::abs(std::log(s)), 1.0 + cfg_.eta);
  }
  if (!(t > 1.0)) throw std::domain_error("global beta_left needs t > 1");
  const double gpow = std::pow(grad_at(t), 0.5 * (cfg_.p - 1));
  return cfg_.C1 * (1.0 + gpow) * t * std::pow(std::abs(std::log(t)), 1.0 + cfg_.eta);
}

double ScaleState::beta_floor(double t) const {
  if (cfg_.p % 2 != 0) throw std::domain_error("beta_floor requires an even power p = 2n");
  return floor_[index_at_or_before(t)];
}

CompactScales ScaleState::compact_scales(double tau) const {
  if (cfg_.p % 2 != 0)
    throw std::domain_error("compact scales require an even power p = 2n");
  CompactScales out;
  if (regime_ == Regime::blowup) {
    if (!T_star_) throw configuration_error("compact scales need a T* estimate in blow-up regime");
    const double limit = std::min(0.5, *T_star_);
    if (!(tau > 0.0) || !(tau < limit))
      throw std::domain_error("blow-up compact scales need 0 < s < min(1/2, T*)");
    const double beta = beta_floor(*T_star_ - tau);
    const double al = std::abs(std::log(tau));
    const double sb = tau * beta;
    out.theta = std::cbrt(sb) * al * al;
    out.lambda2 = std::pow(sb, 2.0 / 3.0);
    out.lambda1 = out.lambda2 / (al * al);
    out.mu_prime_bound = std::pow(beta, 2.0 / 3.0) / (std::cbrt(tau) * al);
    out.lambda_statement = out.lambda2 / al;
    out.beta = beta;
  } else {
    if (!(tau >= kEsq)) throw std::domain_error("global compact scales need t >= e^2");
    const double beta = beta_floor(tau);
    const double lt = std::log(tau);
    const double tb = tau * beta;
    out.theta = std::cbrt(tb) * lt * lt;
    out.lambda2 = std::pow(tb, 2.0 / 3.0);
    out.lambda1 = out.lambda2 / lt;
    out.mu_prime_bound = out.lambda2 / tau;
    out.lambda_statement = out.lambda1;
    out.beta = beta;
  }
  return out;
}

double mu_track(const ScaleState& state, const Field& f, double prev_mu, double dt, double tau,
                bool fixed_mode) {
  if (fixed_mode) return prev_mu;
  const CompactScales cs = state.compact_scales(tau);
  const Grid& g = *f.grid;
  const double lo = std::max(prev_mu - cs.lambda1, g.x_min());
  const double hi = std::min(prev_mu + cs.lambda1, g.x_min() + g.length());
  double m0 = 0.0, m1 = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    if (x >= lo && x < hi) {
      const double w = f.values[j] * f.values[j];
      m0 += w;
      m1 += w * x;
    }
  }
  if (m0 <= 0.0) return prev_mu;
  const double centroid = m1 / m0;
  const double max_move = cs.mu_prime_bound * std::abs(dt);
  return prev_mu + std::clamp(centroid - prev_mu, -max_move, max_move);
}

}  // namespace gkdv
