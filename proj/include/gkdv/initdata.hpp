/*
  Initial conditions: exact traveling-wave profiles, scaled/perturbed
  solitons, gaussians and superpositions.
*/
#pragma once

#include <variant>
#include <vector>

#include "gkdv/grid.hpp"

namespace gkdv {

struct SolitonInit {
  int p = 2;
  double c = 1.0;
  double x0 = 0.0;
};

struct ScaledSolitonInit {
  int p = 2;
  double amplitude_factor = 1.0;
  double c = 1.0;
  double x0 = 0.0;
};

struct GaussianInit {
  double amplitude = 1.0;
  double width = 1.0;
  double x0 = 0.0;
};

struct TwoSolitonInit {
  int p = 2;
  double c1 = 1.0, x1 = 0.0;
  double c2 = 1.0, x2 = 0.0;
};

struct CustomSamplesInit {
  std::vector<double> values;
};

using InitSpec =
    std::variant<SolitonInit, ScaledSolitonInit, GaussianInit, TwoSolitonInit, CustomSamplesInit>;

// Q_c(x - x0) with Q_c(s) = c^{1/(p-1)} Q(sqrt(c) s) and
// Q(sigma) = ((p+1) / (2 cosh^2((p-1) sigma / 2)))^{1/(p-1)}.
Field soliton_profile(int p, double c, double x0, const GridPtr& grid);

// sup norm of f'' + f^p - c f; zero for the exact profile.
double soliton_residual(int p, double c, const Field& f);

Field make_initial(const InitSpec& spec, const GridPtr& grid);

// max boundary-sample magnitude divided by the peak; > 1e-12 means the
// periodic window truncates the profile tails too aggressively.
double edge_to_peak_ratio(const Field& f);

}  // namespace gkdv
