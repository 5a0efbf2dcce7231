#include "gkdv/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gkdv {

namespace {
// FFTW planning is not thread safe; execution through the plan's own
// buffers is, as long as each plan belongs to one thread.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

SpectralTransform::SpectralTransform(int n) : n_(n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("transform size must be even and >= 2");
  std::lock_guard<std::mutex> lock(planner_mutex());
  real_buf_ = fftw_alloc_real(n);
  cplx_buf_ = fftw_alloc_complex(n / 2 + 1);
  fwd_plan_ = fftw_plan_dft_r2c_1d(n, real_buf_, static_cast<fftw_complex*>(cplx_buf_),
                                   FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(n, static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                   FFTW_ESTIMATE);
  if (!fwd_plan_ || !inv_plan_) throw std::runtime_error("fftw plan creation failed");
}

SpectralTransform::~SpectralTransform() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

void SpectralTransform::forward(std::span<const double> u, std::span<std::complex<double>> c) {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(c.size()) != half_size())
    throw std::invalid_argument("forward: size mismatch");
  std::memcpy(real_buf_, u.data(), sizeof(double) * n_);
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  const auto* out = static_cast<fftw_complex*>(cplx_buf_);
  const double scale = 1.0 / n_;
  for (int j = 0; j < half_size(); ++j)
    c[j] = std::complex<double>(out[j][0] * scale, out[j][1] * scale);
}

void SpectralTransform::inverse(std::span<const std::complex<double>> c, std::span<double> u) {
  if (static_cast<int>(c.size()) != half_size() || static_cast<int>(u.size()) != n_)
    throw std::invalid_argument("inverse: size mismatch");
  auto* in = static_cast<fftw_complex*>(cplx_buf_);
  for (int j = 0; j < half_size(); ++j) {
    in[j][0] = c[j].real();
    in[j][1] = c[j].imag();
  }
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  std::memcpy(u.data(), real_buf_, sizeof(double) * n_);
}

SpectralTransform& transform_for(int n) {
  thread_local std::map<int, std::unique_ptr<SpectralTransform>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<SpectralTransform>(n)).first;
  return *it->second;
}

}  // namespace gkdv
