#include "gkdv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkdv/errors.hpp"
#include "gkdv/fft.hpp"

namespace gkdv {

Grid::Grid(int n_points, double length, double center)
    : n_(n_points), length_(length), center_(center), dx_(length / n_points) {
  if (n_points < 4 || n_points % 2 != 0)
    throw std::invalid_argument("grid size must be even and >= 4");
  if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");
  wavenumbers_.resize(n_);
  const double dk = 2.0 * std::numbers::pi / length_;
  for (int j = 0; j <= n_ / 2; ++j) wavenumbers_[j] = dk * j;
  for (int j = n_ / 2 + 1; j < n_; ++j) wavenumbers_[j] = dk * (j - n_);
}

bool Grid::operator==(const Grid& other) const {
  return n_ == other.n_ && length_ == other.length_ && center_ == other.center_;
}

GridPtr make_grid(int n_points, double length, double center) {
  return std::make_shared<const Grid>(n_points, length, center);
}

Field::Field(GridPtr g, std::vector<double> v, double t)
    : grid(std::move(g)), values(std::move(v)), time(t) {
  if (static_cast<int>(values.size()) != grid->n())
    throw std::invalid_argument("field sample count does not match grid");
}

bool Field::finite() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

namespace {
void require_finite(const Field& f, const char* op) {
  if (!f.finite()) throw invalid_field_error(std::string(op) + ": non-finite field values");
}
}  // namespace

Spectrum spectrum_of(const Field& f) {
  Spectrum c(f.grid->half_size());
  transform_for(f.grid->n()).forward(f.values, c);
  return c;
}

Field field_from_spectrum(const GridPtr& grid, const Spectrum& c, double time) {
  Field out(grid, time);
  transform_for(grid->n()).inverse(c, out.values);
  return out;
}

Field spectral_derivative(const Field& f, int order) {
  require_finite(f, "spectral_derivative");
  if (order < 1 || order > 3) throw std::domain_error("derivative order must be 1, 2 or 3");
  const Grid& g = *f.grid;
  Spectrum c = spectrum_of(f);
  const int nh = g.half_size();
  for (int j = 0; j < nh; ++j) {
    const std::complex<double> ik(0.0, g.k_half(j));
    std::complex<double> m = ik;
    for (int r = 1; r < order; ++r) m *= ik;
    c[j] *= m;
  }
  if (order % 2 == 1) c[nh - 1] = 0.0;  // Nyquist sine component is invisible
  Field out = field_from_spectrum(f.grid, c, f.time);
  return out;
}

Field fractional_derivative(const Field& f, double s) {
  require_finite(f, "fractional_derivative");
  if (s < 0.0) throw std::domain_error("fractional order must be >= 0");
  if (s == 0.0) return f;
  Spectrum c = spectrum_of(f);
  const Grid& g = *f.grid;
  for (int j = 0; j < g.half_size(); ++j) c[j] *= std::pow(g.k_half(j), s);
  return field_from_spectrum(f.grid, c, f.time);
}

double integrate(const Field& f) {
  require_finite(f, "integrate");
  double sum = 0.0;
  for (double v : f.values) sum += v;
  return sum * f.grid->dx();
}

double norm_l2(const Field& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v * v;
  return std::sqrt(sum * f.grid->dx());
}

double norm_lq(const Field& f, double q) {
  if (q < 1.0) throw std::domain_error("Lq norm requires q >= 1");
  double sum = 0.0;
  for (double v : f.values) sum += std::pow(std::abs(v), q);
  return std::pow(sum * f.grid->dx(), 1.0 / q);
}

double norm_sup(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double norm_grad_l2(const Field& f) {
  return norm_l2(spectral_derivative(f, 1));
}

double norm_hs(const Field& f, double s) {
  if (s < 0.0) throw std::domain_error("Hs norm requires s >= 0");
  const double a = norm_l2(f);
  const double b = norm_l2(fractional_derivative(f, s));
  return std::sqrt(a * a + b * b);
}

namespace {
void check_window(const Grid& g, Interval w) {
  const double lo_edge = g.x_min() - 1e-12 * g.length();
  const double hi_edge = g.x_min() + g.length() + 1e-12 * g.length();
  if (w.lo > w.hi || w.lo < lo_edge || w.hi > hi_edge)
    throw std::domain_error("window interval outside the periodic domain");
}
}  // namespace

double integrate_window_power(const Field& f, Interval w, int power) {
  check_window(*f.grid, w);
  const Grid& g = *f.grid;
  double sum = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    if (x >= w.lo && x < w.hi) {
      double t = f.values[j];
      double acc = t;
      for (int r = 1; r < power; ++r) acc *= t;
      sum += acc;
    }
  }
  return sum * g.dx();
}

double norm_l2_window(const Field& f, Interval w) {
  check_window(*f.grid, w);
  const Grid& g = *f.grid;
  double sum = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    if (x >= w.lo && x < w.hi) sum += f.values[j] * f.values[j];
  }
  return std::sqrt(sum * g.dx());
}

double norm_lq_window(const Field& f, double q, Interval w) {
  if (q < 1.0) throw std::domain_error("Lq norm requires q >= 1");
  check_window(*f.grid, w);
  const Grid& g = *f.grid;
  double sum = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    if (x >= w.lo && x < w.hi) sum += std::pow(std::abs(f.values[j]), q);
  }
  return std::pow(sum * g.dx(), 1.0 / q);
}

double l2sq_from_spectrum(const Grid& grid, std::span<const std::complex<double>> c) {
  double sum = 0.0;
  const int nh = grid.half_size();
  for (int j = 0; j < nh; ++j) {
    const double w = (j == 0 || j == nh - 1) ? 1.0 : 2.0;
    sum += w * std::norm(c[j]);
  }
  return sum * grid.length();
}

double gradsq_from_spectrum(const Grid& grid, std::span<const std::complex<double>> c) {
  double sum = 0.0;
  const int nh = grid.half_size();
  // Nyquist bin excluded to match the odd-order derivative convention.
  for (int j = 1; j < nh - 1; ++j) {
    const double k = grid.k_half(j);
    sum += 2.0 * k * k * std::norm(c[j]);
  }
  return sum * grid.length();
}

}  // namespace gkdv
