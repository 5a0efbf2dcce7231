/*
  Real-to-complex transform wrapper used by the spectral grid operations
  and the time stepper.  One instance owns FFTW plans and work buffers for
  a single transform size; instances are not shared across threads.
*/
#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace gkdv {

class SpectralTransform {
 public:
  explicit SpectralTransform(int n);
  ~SpectralTransform();
  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  int size() const { return n_; }
  int half_size() const { return n_ / 2 + 1; }

  // u (n reals) -> c (n/2+1 coefficients), scaled by 1/n so that
  // u(x_j) = sum_k c_k e^{i k x_j} with conjugate pairs counted once.
  void forward(std::span<const double> u, std::span<std::complex<double>> c);
  // inverse synthesis, exact inverse of forward
  void inverse(std::span<const std::complex<double>> c, std::span<double> u);

 private:
  int n_;
  double* real_buf_;
  void* cplx_buf_;
  void* fwd_plan_;
  void* inv_plan_;
};

// Per-thread plan cache keyed by transform size.
SpectralTransform& transform_for(int n);

}  // namespace gkdv
