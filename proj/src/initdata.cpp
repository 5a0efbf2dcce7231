#include "gkdv/initdata.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gkdv {

namespace {
double powi(double v, int p) {
  double acc = v;
  for (int r = 1; r < p; ++r) acc *= v;
  return acc;
}
}  // namespace

Field soliton_profile(int p, double c, double x0, const GridPtr& grid) {
  if (p < 2) throw std::domain_error("soliton profile requires p >= 2");
  if (!(c > 0.0)) throw std::domain_error("soliton speed must be positive");
  Field f(grid);
  const double sc = std::sqrt(c);
  const double amp = std::pow(c, 1.0 / (p - 1));
  const double inv = 1.0 / (p - 1);
  for (int j = 0; j < grid->n(); ++j) {
    const double sigma = sc * (grid->x(j) - x0);
    const double ch = std::cosh(0.5 * (p - 1) * sigma);
    f.values[j] = amp * std::pow(0.5 * (p + 1) / (ch * ch), inv);
  }
  return f;
}

double soliton_residual(int p, double c, const Field& f) {
  const Field fxx = spectral_derivative(f, 2);
  double res = 0.0;
  for (int j = 0; j < f.grid->n(); ++j) {
    const double r = fxx.values[j] + powi(f.values[j], p) - c * f.values[j];
    res = std::max(res, std::abs(r));
  }
  return res;
}

Field make_initial(const InitSpec& spec, const GridPtr& grid) {
  return std::visit(
      [&](const auto& s) -> Field {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SolitonInit>) {
          return soliton_profile(s.p, s.c, s.x0, grid);
        } else if constexpr (std::is_same_v<T, ScaledSolitonInit>) {
          Field f = soliton_profile(s.p, s.c, s.x0, grid);
          for (double& v : f.values) v *= s.amplitude_factor;
          return f;
        } else if constexpr (std::is_same_v<T, GaussianInit>) {
          if (!(s.width > 0.0)) throw std::domain_error("gaussian width must be positive");
          Field f(grid);
          for (int j = 0; j < grid->n(); ++j) {
            const double z = (grid->x(j) - s.x0) / s.width;
            f.values[j] = s.amplitude * std::exp(-0.5 * z * z);
          }
          return f;
        } else if constexpr (std::is_same_v<T, TwoSolitonInit>) {
          Field f = soliton_profile(s.p, s.c1, s.x1, grid);
          const Field g = soliton_profile(s.p, s.c2, s.x2, grid);
          for (int j = 0; j < grid->n(); ++j) f.values[j] += g.values[j];
          return f;
        } else {
          static_assert(std::is_same_v<T, CustomSamplesInit>);
          if (static_cast<int>(s.values.size()) != grid->n())
            throw std::invalid_argument("custom_samples length does not match grid");
          return Field(grid, s.values);
        }
      },
      spec);
}

double edge_to_peak_ratio(const Field& f) {
  const int n = f.grid->n();
  const double peak = norm_sup(f);
  if (peak == 0.0) return 0.0;
  const double edge = std::max(std::abs(f.values[0]), std::abs(f.values[n - 1]));
  return edge / peak;
}

}  // namespace gkdv
