/*
  Periodic spatial grid, spectral differentiation (integer and fractional
  order), quadrature and norms.  Every other module builds on these.
*/
#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace gkdv {

class Grid {
 public:
  // Domain is [center - length/2, center + length/2), periodic.
  Grid(int n_points, double length, double center = 0.0);

  int n() const { return n_; }
  double length() const { return length_; }
  double center() const { return center_; }
  double dx() const { return dx_; }
  double x_min() const { return center_ - 0.5 * length_; }
  double x(int j) const { return x_min() + j * dx_; }

  // Signed wavenumber table in FFT order: k_j = 2*pi*j/L for j <= n/2,
  // then negative frequencies.  The lone Nyquist entry (even n) is stored
  // with positive sign.
  std::span<const double> wavenumbers() const { return wavenumbers_; }
  // Wavenumber of half-spectrum bin j (j = 0..n/2), all >= 0.
  double k_half(int j) const { return wavenumbers_[j]; }
  int half_size() const { return n_ / 2 + 1; }

  bool operator==(const Grid& other) const;

 private:
  int n_;
  double length_, center_, dx_;
  std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int n_points, double length, double center = 0.0);

// Real samples of u at one time, attached to a grid.
struct Field {
  GridPtr grid;
  std::vector<double> values;
  double time = 0.0;

  Field() = default;
  explicit Field(GridPtr g, double t = 0.0) : grid(std::move(g)), values(grid->n(), 0.0), time(t) {}
  Field(GridPtr g, std::vector<double> v, double t = 0.0);

  bool finite() const;
};

using Spectrum = std::vector<std::complex<double>>;

// Forward/inverse transforms with the amplitude normalization of
// SpectralTransform (coefficients of the trig interpolant).
Spectrum spectrum_of(const Field& f);
Field field_from_spectrum(const GridPtr& grid, const Spectrum& c, double time = 0.0);

// Fourier-multiplier derivative: multiplication by (i k)^order.  The
// Nyquist bin is zeroed for odd orders (its sine component is invisible
// on the grid), kept real for even orders.
Field spectral_derivative(const Field& f, int order);

// |k|^s multiplier; s = 0 is the identity.  The Nyquist bin is scaled by
// |k_nyquist|^s like any other (real multiplier convention).
Field fractional_derivative(const Field& f, double s);

// Periodic rectangle rule dx * sum(values); spectrally accurate for
// smooth periodic integrands.
double integrate(const Field& f);

// Half-open window [lo, hi) used by the localized quadrature rules.
struct Interval {
  double lo = 0.0, hi = 0.0;
};

double norm_l2(const Field& f);
double norm_lq(const Field& f, double q);
double norm_sup(const Field& f);
double norm_grad_l2(const Field& f);
double norm_hs(const Field& f, double s);  // sqrt(L2^2 + ||D^s f||_L2^2)
double norm_l2_window(const Field& f, Interval w);
double norm_lq_window(const Field& f, double q, Interval w);

// dx * sum over samples with x in [lo, hi) of f^power (integer power >= 1).
double integrate_window_power(const Field& f, Interval w, int power);

// L2 mass computed from coefficients (Parseval); used for cross-checks.
double l2sq_from_spectrum(const Grid& grid, std::span<const std::complex<double>> c);
double gradsq_from_spectrum(const Grid& grid, std::span<const std::complex<double>> c);

}  // namespace gkdv
