#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lognls/wave_field.hpp"

namespace lognls {

/// Owns a pair of FFTW plans (forward and backward) of one size.
///
/// Both transforms are unnormalized: backward(forward(f)) == n * f. Plans are
/// built with FFTW_ESTIMATE so that the chosen algorithm, and therefore the
/// rounding, is identical from run to run. Planner calls are serialized
/// internally; executing distinct FftPlan objects from different threads is safe.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();

  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  FftPlan(FftPlan&& other) noexcept;
  FftPlan& operator=(FftPlan&& other) noexcept;

  std::size_t size() const { return n_; }

  /// `in` and `out` may alias.
  void forward(std::span<const cplx> in, std::span<cplx> out);
  void backward(std::span<const cplx> in, std::span<cplx> out);

 private:
  void execute(void* plan, std::span<const cplx> in, std::span<cplx> out);
  void release();

  std::size_t n_ = 0;
  cplx* buffer_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Unnormalized forward DFT: F_m = sum_j f_j exp(-2 pi i j m / n).
std::vector<cplx> dft_forward(const WaveField& field);
/// Inverse of dft_forward (divides by n).
WaveField dft_inverse(std::span<const cplx> spectrum, const Grid1D& grid, double time = 0.0);

}  // namespace lognls
