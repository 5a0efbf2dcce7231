#include "gkdv/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "gkdv/errors.hpp"

namespace gkdv {

double mass(const Field& f) {
  if (!f.finite()) throw invalid_field_error("mass: non-finite field");
  double sum = 0.0;
  for (double v : f.values) sum += v * v;
  return sum * f.grid->dx();
}

double energy(const Field& f, int p) {
  if (p < 2) throw std::domain_error("energy requires p >= 2");
  const Field fx = spectral_derivative(f, 1);
  double sum = 0.0;
  for (int j = 0; j < f.grid->n(); ++j) {
    double up = f.values[j];
    for (int r = 1; r < p; ++r) up *= f.values[j];  // f^p
    sum += 0.5 * fx.values[j] * fx.values[j] - up * f.values[j] / (p + 1);
  }
  return sum * f.grid->dx();
}

double critical_exponent(int p) {
  if (p < 2) throw std::domain_error("critical exponent requires p >= 2");
  return (p - 5) / (2.0 * (p - 1));
}

double blowup_rate_exponent(double s, int p) {
  const double sp = critical_exponent(p);
  if (s < sp) throw std::domain_error("rate bound needs s >= s_p");
  return (s - sp) / 3.0;
}

double minimal_blowup_rate(double t, double T_star, double s, int p, double C) {
  if (!(C > 0.0)) throw std::domain_error("rate constant must be positive");
  if (!(t < T_star)) throw std::domain_error("rate bound needs t < T_star");
  return C * std::pow(T_star - t, -blowup_rate_exponent(s, p));
}

double gn_alpha(double q, double s) {
  if (!(q > 2.0)) throw std::domain_error("GN2 requires q > 2");
  if (!(s > 0.0))
    throw exponent_incompatibility_error("GN2 alpha undefined for s <= 0");
  const double alpha = (0.5 - 1.0 / q) / s;
  if (!(alpha > 0.0) || alpha > 1.0)
    throw exponent_incompatibility_error("GN2 alpha outside (0,1]");
  return alpha;
}

GnRatios gn_ratios(const Field& f, double q, double s) {
  const double m = mass(f);
  if (m == 0.0) throw std::domain_error("gn_ratios undefined for the zero field");
  const double alpha = gn_alpha(q, s);
  const Field fx = spectral_derivative(f, 1);
  const double gradsq = mass(fx);
  const double dx = f.grid->dx();

  double lq_sum = 0.0, sup = 0.0;
  for (double v : f.values) {
    lq_sum += std::pow(std::abs(v), q);
    sup = std::max(sup, std::abs(v));
  }
  lq_sum *= dx;

  GnRatios r{};
  r.r1 = lq_sum / (std::pow(m, 0.25 * (q + 2.0)) * std::pow(gradsq, 0.25 * (q - 2.0)));
  const double ds_l2 = norm_l2(fractional_derivative(f, s));
  r.r2 = std::pow(lq_sum, 1.0 / q) /
         (std::pow(std::sqrt(m), 1.0 - alpha) * std::pow(ds_l2, alpha));
  r.r3 = sup / (std::pow(m, 0.25) * std::pow(gradsq, 0.25));
  return r;
}

ConservationRecord conservation_record(const Field& f, int p) {
  ConservationRecord rec;
  rec.t = f.time;
  rec.mass = mass(f);
  rec.energy = energy(f, p);
  rec.grad_l2 = norm_grad_l2(f);
  rec.sup = norm_sup(f);
  const double sp = critical_exponent(p);
  rec.hs_crit = sp > 0.0 ? norm_l2(fractional_derivative(f, sp)) : norm_l2(f);
  return rec;
}

}  // namespace gkdv
