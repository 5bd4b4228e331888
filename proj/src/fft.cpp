#include "lognls/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>
#include <utility>

#include "lognls/errors.hpp"

namespace lognls {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("fft: zero-length transform");
  std::lock_guard lock(planner_mutex());
  buffer_ = reinterpret_cast<cplx*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (buffer_ == nullptr) throw std::bad_alloc();
  auto* buf = reinterpret_cast<fftw_complex*>(buffer_);
  const int len = static_cast<int>(n);
  forward_plan_ = fftw_plan_dft_1d(len, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_plan_ = fftw_plan_dft_1d(len, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() { release(); }

FftPlan::FftPlan(FftPlan&& other) noexcept
    : n_(std::exchange(other.n_, 0)),
      buffer_(std::exchange(other.buffer_, nullptr)),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      backward_plan_(std::exchange(other.backward_plan_, nullptr)) {}

FftPlan& FftPlan::operator=(FftPlan&& other) noexcept {
  if (this != &other) {
    release();
    n_ = std::exchange(other.n_, 0);
    buffer_ = std::exchange(other.buffer_, nullptr);
    forward_plan_ = std::exchange(other.forward_plan_, nullptr);
    backward_plan_ = std::exchange(other.backward_plan_, nullptr);
  }
  return *this;
}

void FftPlan::release() {
  if (buffer_ == nullptr) return;
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
  fftw_free(buffer_);
  buffer_ = nullptr;
}

void FftPlan::execute(void* plan, std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != n_ || out.size() != n_) throw DomainError("fft: size mismatch");
  std::copy(in.begin(), in.end(), buffer_);
  fftw_execute(static_cast<fftw_plan>(plan));
  std::copy(buffer_, buffer_ + n_, out.begin());
}

void FftPlan::forward(std::span<const cplx> in, std::span<cplx> out) {
  execute(forward_plan_, in, out);
}

void FftPlan::backward(std::span<const cplx> in, std::span<cplx> out) {
  execute(backward_plan_, in, out);
}

std::vector<cplx> dft_forward(const WaveField& field) {
  FftPlan plan(field.size());
  std::vector<cplx> spectrum(field.size());
  plan.forward(field.values, spectrum);
  return spectrum;
}

WaveField dft_inverse(std::span<const cplx> spectrum, const Grid1D& grid, double time) {
  if (spectrum.size() != grid.size()) throw DomainError("dft_inverse: spectrum/grid size mismatch");
  FftPlan plan(grid.size());
  std::vector<cplx> values(grid.size());
  plan.backward(spectrum, values);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (cplx& z : values) z *= scale;
  return WaveField(grid, std::move(values), time);
}

}  // namespace lognls
