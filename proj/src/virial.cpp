#include "gkdv/virial.hpp"

#include <cmath>
#include <stdexcept>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {

double sech2(double z) {
  const double c = std::cosh(z);
  return 1.0 / (c * c);
}

// derivatives of h(z) = sech^2 z in terms of h and t = tanh z:
//   h'   = -2 h t
//   h''  =  4 h t^2 - 2 h^2
//   h''' = -8 h t^3 + 16 h^2 t

double powi(double v, int p) {
  double acc = v;
  for (int r = 1; r < p; ++r) acc *= v;
  return acc;
}

}  // namespace

double chi_cutoff(double s) {
  if (s <= -1.0) return 1.0;
  if (s >= 0.0) return 0.0;
  const double xi = s + 1.0;
  double G;
  if (xi <= 0.25) {
    G = (16.0 / 3.0) * xi * xi * xi;
  } else if (xi <= 0.75) {
    const double y = xi - 0.5;
    G = 2.0 * xi - (16.0 / 3.0) * y * y * y - 0.5;
  } else {
    const double y = 1.0 - xi;
    G = 1.0 - (16.0 / 3.0) * y * y * y;
  }
  return 1.0 - G;
}

double chi_cutoff_d1(double s) {
  if (s <= -1.0 || s >= 0.0) return 0.0;
  const double xi = s + 1.0;
  if (xi <= 0.25) return -16.0 * xi * xi;
  if (xi <= 0.75) {
    const double y = xi - 0.5;
    return -(2.0 - 16.0 * y * y);
  }
  const double y = 1.0 - xi;
  return -16.0 * y * y;
}

double chi_cutoff_d2(double s) {
  if (s <= -1.0 || s >= 0.0) return 0.0;
  const double xi = s + 1.0;
  if (xi <= 0.25) return -32.0 * xi;
  if (xi <= 0.75) return 32.0 * (xi - 0.5);
  return 32.0 * (1.0 - xi);
}

double chi_cutoff_d3(double s) {
  if (s <= -1.0 || s >= 0.0) return 0.0;
  const double xi = s + 1.0;
  if (xi <= 0.25) return -32.0;
  if (xi <= 0.75) return 32.0;
  return -32.0;
}

namespace {

WeightEval eval_right_tanh(const RightTanhWeight& w, const GridPtr& grid,
                           const std::optional<ScaleDerivatives>& sd) {
  if (!(w.L > 0.0)) throw std::domain_error("right_tanh weight needs L > 0");
  WeightEval out{Field(grid), Field(grid), Field(grid), std::nullopt};
  if (sd) out.phi_t = Field(grid);
  const int n = grid->n();
  for (int j = 0; j < n; ++j) {
    const double y = (grid->x(j) - w.front_position) / w.L;
    const double t = std::tanh(y);
    const double h = sech2(y);
    out.phi.values[j] = 0.5 * (1.0 + t);
    out.phi_x.values[j] = 0.5 * h / w.L;
    out.phi_xxx.values[j] = 0.5 * (4.0 * h * t * t - 2.0 * h * h) / (w.L * w.L * w.L);
    if (sd) (*out.phi_t).values[j] = -sd->front_dot * 0.5 * h / w.L;
  }
  return out;
}

WeightEval eval_left_chi(const LeftChiWeight& w, const GridPtr& grid,
                         const std::optional<ScaleDerivatives>& sd) {
  if (!(w.mu > 0.0) || !(w.mu_t1 > 0.0))
    throw std::domain_error("left_chi weight needs mu, mu_t1 > 0");
  WeightEval out{Field(grid), Field(grid), Field(grid), std::nullopt};
  if (sd) out.phi_t = Field(grid);
  const double shift = 0.5 * (w.mu + w.mu_t1);
  const int n = grid->n();
  for (int j = 0; j < n; ++j) {
    const double z = (grid->x(j) + shift) / w.mu;
    out.phi.values[j] = chi_cutoff(z);
    out.phi_x.values[j] = chi_cutoff_d1(z) / w.mu;
    out.phi_xxx.values[j] = chi_cutoff_d3(z) / (w.mu * w.mu * w.mu);
    if (sd)
      (*out.phi_t).values[j] = chi_cutoff_d1(z) * (0.5 - z) * sd->mu_dot / w.mu;
  }
  return out;
}

WeightEval eval_compact(const CompactWeight& w, const GridPtr& grid,
                        const std::optional<ScaleDerivatives>& sd) {
  if (!(w.theta > 0.0) || !(w.lambda1 > 0.0) || !(w.lambda2 > 0.0))
    throw std::domain_error("compact weight needs positive scales");
  WeightEval out{Field(grid), Field(grid), Field(grid), std::nullopt};
  if (sd) out.phi_t = Field(grid);
  const int n = grid->n();
  const double th = w.theta, l1 = w.lambda1, l2 = w.lambda2;
  for (int j = 0; j < n; ++j) {
    const double d = grid->x(j) - w.mu;
    const double z1 = d / l1, z2 = d / l2;
    const double t1 = std::tanh(z1), h1 = sech2(z1);
    const double t2 = std::tanh(z2), h2 = sech2(z2);
    const double h2p = -2.0 * h2 * t2;
    const double h2pp = 4.0 * h2 * t2 * t2 - 2.0 * h2 * h2;
    const double h2ppp = -8.0 * h2 * t2 * t2 * t2 + 16.0 * h2 * h2 * t2;
    const double h1p = -2.0 * h1 * t1;
    const double h1pp = 4.0 * h1 * t1 * t1 - 2.0 * h1 * h1;

    out.phi.values[j] = t1 * h2 / th;
    // chain rule; the second coefficient is 1/(theta lambda2)
    out.phi_x.values[j] = h1 * h2 / (th * l1) + t1 * h2p / (th * l2);
    out.phi_xxx.values[j] = h1pp * h2 / (th * l1 * l1 * l1) +
                            3.0 * h1p * h2p / (th * l1 * l1 * l2) +
                            3.0 * h1 * h2pp / (th * l1 * l2 * l2) +
                            t1 * h2ppp / (th * l2 * l2 * l2);
    if (sd) {
      const double dt = -sd->theta_dot / (th * th) * t1 * h2 -
                        sd->lambda1_dot / (th * l1) * z1 * h1 * h2 -
                        sd->mu_dot / (th * l1) * h1 * h2 -
                        sd->lambda2_dot / (th * l2) * t1 * z2 * h2p -
                        sd->mu_dot / (th * l2) * t1 * h2p;
      (*out.phi_t).values[j] = dt;
    }
  }
  return out;
}

}  // namespace

WeightEval eval_weight(const WeightSpec& spec, const GridPtr& grid,
                       const std::optional<ScaleDerivatives>& derivs) {
  return std::visit(
      [&](const auto& w) -> WeightEval {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, RightTanhWeight>) return eval_right_tanh(w, grid, derivs);
        else if constexpr (std::is_same_v<T, LeftChiWeight>) return eval_left_chi(w, grid, derivs);
        else return eval_compact(w, grid, derivs);
      },
      spec);
}

double quadratic_virial(const Field& f, const WeightEval& w) {
  if (!(*f.grid == *w.phi.grid)) throw std::invalid_argument("field/weight grid mismatch");
  double sum = 0.0;
  for (int j = 0; j < f.grid->n(); ++j) sum += w.phi.values[j] * f.values[j] * f.values[j];
  return 0.5 * sum * f.grid->dx();
}

KatoTerms kato_rhs(const Field& f, const WeightEval& w, int p) {
  if (!w.phi_t)
    throw configuration_error("kato_rhs needs a weight evaluated with scale derivatives");
  if (!(*f.grid == *w.phi.grid)) throw std::invalid_argument("field/weight grid mismatch");
  const Field fx = spectral_derivative(f, 1);
  const double dx = f.grid->dx();
  KatoTerms terms;
  for (int j = 0; j < f.grid->n(); ++j) {
    const double u = f.values[j];
    const double u2 = u * u;
    terms.time_term += 0.5 * (*w.phi_t).values[j] * u2;
    terms.gradient_term += -1.5 * w.phi_x.values[j] * fx.values[j] * fx.values[j];
    terms.dispersive_term += 0.5 * w.phi_xxx.values[j] * u2;
    terms.flux_term += w.phi_x.values[j] * powi(u, p) * u;  // u^{p+1}
  }
  terms.time_term *= dx;
  terms.gradient_term *= dx;
  terms.dispersive_term *= dx;
  terms.flux_term *= dx * static_cast<double>(p) / (p + 1);
  return terms;
}

double linear_virial(const Field& f, const WeightEval& w) {
  if (!(*f.grid == *w.phi.grid)) throw std::invalid_argument("field/weight grid mismatch");
  double sum = 0.0;
  for (int j = 0; j < f.grid->n(); ++j) sum += w.phi.values[j] * f.values[j];
  return sum * f.grid->dx();
}

LinearVirialTerms linear_virial_rhs(const Field& f, const WeightSpec& spec, const WeightEval& w,
                                    int p) {
  if (!w.phi_t)
    throw configuration_error("linear_virial_rhs needs a weight evaluated with scale derivatives");
  if (!(*f.grid == *w.phi.grid)) throw std::invalid_argument("field/weight grid mismatch");
  const double dx = f.grid->dx();
  LinearVirialTerms terms;
  for (int j = 0; j < f.grid->n(); ++j) {
    const double u = f.values[j];
    terms.time_term += (*w.phi_t).values[j] * u;
    terms.dispersive_term += w.phi_xxx.values[j] * u;
    terms.flux_term += w.phi_x.values[j] * powi(u, p);
  }
  terms.time_term *= dx;
  terms.dispersive_term *= dx;
  terms.flux_term *= dx;

  if (p % 2 == 0) {
    if (const auto* c = std::get_if<CompactWeight>(&spec)) {
      const Grid& g = *f.grid;
      const double lo = std::max(c->mu - c->lambda1, g.x_min());
      const double hi = std::min(c->mu + c->lambda1, g.x_min() + g.length());
      double local = 0.0;
      if (lo < hi) local = integrate_window_power(f, Interval{lo, hi}, p);
      terms.coercive_term = local / (c->theta * c->lambda1);
    }
  }
  return terms;
}

}  // namespace gkdv
