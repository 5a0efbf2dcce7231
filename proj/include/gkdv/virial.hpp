/*
  Weight families with closed-form space/time derivatives, the quadratic
  (Kato) and linear virial functionals, and their identity right-hand
  sides.  Weight derivatives are evaluated analytically, not by spectral
  differentiation, so the two routes can be cross-checked.
*/
#pragma once

#include <optional>
#include <variant>

#include "gkdv/grid.hpp"

namespace gkdv {

// phi(x) = (1/2)(1 + tanh((x - front_position)/L)); increasing front.
struct RightTanhWeight {
  double L = 1.0;
  double front_position = 0.0;
};

// phi(x) = chi((x + (mu + mu_t1)/2)/mu) with chi the fixed smooth
// decreasing cutoff (1 for s <= -1, 0 for s >= 0).
struct LeftChiWeight {
  double mu = 1.0;
  double mu_t1 = 1.0;
};

// phi(x) = (1/theta) tanh((x-mu)/lambda1) sech^2((x-mu)/lambda2); odd
// about x = mu, |phi| <= 1/theta.
struct CompactWeight {
  double theta = 1.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double mu = 0.0;
};

using WeightSpec = std::variant<RightTanhWeight, LeftChiWeight, CompactWeight>;

// Time derivatives of the scale functions; only the members used by the
// given family are read (front_dot for right_tanh, mu_dot for left_chi,
// all four for the compact family).
struct ScaleDerivatives {
  double theta_dot = 0.0;
  double lambda1_dot = 0.0;
  double lambda2_dot = 0.0;
  double mu_dot = 0.0;
  double front_dot = 0.0;
};

struct WeightEval {
  Field phi;
  Field phi_x;
  Field phi_xxx;
  std::optional<Field> phi_t;  // present only when scale derivatives were supplied
};

WeightEval eval_weight(const WeightSpec& spec, const GridPtr& grid,
                       const std::optional<ScaleDerivatives>& derivs = std::nullopt);

// The fixed cutoff chi and its first three derivatives.  Piecewise cubic
// ramp with bang-bang third derivative: among smooth unit drops over a
// width-one interval this shape minimizes sup|chi'''| (value 32) while
// keeping sup|chi'| = 2 and sup|chi''| = 8.
double chi_cutoff(double s);
double chi_cutoff_d1(double s);
double chi_cutoff_d2(double s);
double chi_cutoff_d3(double s);

// (1/2) * integral of phi f^2
double quadratic_virial(const Field& f, const WeightEval& w);

struct KatoTerms {
  double time_term = 0.0;        // (1/2) int phi_t f^2
  double gradient_term = 0.0;    // -(3/2) int phi_x f_x^2
  double dispersive_term = 0.0;  // (1/2) int phi_xxx f^2
  double flux_term = 0.0;        // p/(p+1) int phi_x f^{p+1}
  double total() const { return time_term + gradient_term + dispersive_term + flux_term; }
};

// d/dt of the quadratic virial along the flow; requires w.phi_t.
KatoTerms kato_rhs(const Field& f, const WeightEval& w, int p);

// integral of phi f
double linear_virial(const Field& f, const WeightEval& w);

struct LinearVirialTerms {
  double time_term = 0.0;        // int phi_t f
  double dispersive_term = 0.0;  // int phi_xxx f
  double flux_term = 0.0;        // int phi_x f^p
  // (1/(theta lambda1)) int_{|x-mu|<=lambda1} f^{2n}; compact family with
  // p = 2n only.
  std::optional<double> coercive_term;
  double total() const { return time_term + dispersive_term + flux_term; }
};

// d/dt of the linear virial along the flow; requires w.phi_t.
LinearVirialTerms linear_virial_rhs(const Field& f, const WeightSpec& spec, const WeightEval& w,
                                    int p);

}  // namespace gkdv
