#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lognls/fft.hpp"
#include "lognls/kernels.hpp"
#include "lognls/madelung.hpp"
#include "lognls/observables.hpp"
#include "lognls/physical_params.hpp"
#include "lognls/wave_field.hpp"

namespace lognls {

enum class Scheme { split_step, crank_nicolson };

struct EvolveConfig {
  double dt = 1e-3;
  std::size_t n_steps = 5000;
  Scheme scheme = Scheme::split_step;
  double log_clamp = kDefaultLogClamp;  ///< relative floor under ln|psi|^2
  double cn_tol = 1e-12;
  std::size_t cn_max_iter = 50;
  std::size_t record_every = 500;  ///< 0 records only the first and last state
  kernels::Backend backend = kernels::Backend::openmp;

  bool operator==(const EvolveConfig&) const = default;
};

/// Throws ConfigError on dt <= 0, log_clamp outside (0, 1e-6], cn_tol <= 0 or cn_max_iter == 0.
void validate(const EvolveConfig& cfg);

struct Trajectory {
  std::vector<WaveField> snapshots;  ///< step 0, every record_every steps, and the last step
  std::vector<std::size_t> steps;    ///< step index of each snapshot
  std::size_t solver_iterations = 0;  ///< total fixed-point iterations (Crank-Nicolson only)

  const WaveField& final_state() const { return snapshots.back(); }
};

/// Called with (step index, state) after every step, and once with step 0 before the first.
using StepObserver = std::function<void(std::size_t, const WaveField&)>;

/// Strang splitting: half step of the local phase exp(-i dt/2hbar (V - b ln|psi|^2)),
/// full kinetic step exp(-i hbar k^2 dt / 2m) in Fourier space, half local step.
/// Both factors have unit modulus, so the local substep leaves |psi| unchanged and
/// is exact.
class SplitStepIntegrator {
 public:
  SplitStepIntegrator(const Grid1D& grid, const PhysicalParams& params, const EvolveConfig& cfg);
  void step(std::span<cplx> psi);

 private:
  void local_half_step(std::span<cplx> psi);

  PhysicalParams params_;
  EvolveConfig cfg_;
  FftPlan plan_;
  std::vector<cplx> propagator_;  // includes the 1/n of the backward transform
  std::vector<cplx> work_;
};

/// Implicit midpoint rule  i hbar (psi1 - psi0)/dt = H[mid] mid, mid = (psi0 + psi1)/2.
/// The kinetic part is diagonal in Fourier space and is inverted exactly (Cayley
/// factor); the local part (V - b ln|mid|^2) mid is iterated to a fixed point.
class CrankNicolsonIntegrator {
 public:
  CrankNicolsonIntegrator(const Grid1D& grid, const PhysicalParams& params,
                          const EvolveConfig& cfg);
  /// Returns the number of fixed-point iterations used. Throws IterationError.
  std::size_t step(std::span<cplx> psi);

 private:
  PhysicalParams params_;
  EvolveConfig cfg_;
  FftPlan plan_;
  std::vector<cplx> propagate_;  // (1 - i theta) / (1 + i theta) / n
  std::vector<cplx> couple_;     // -i (dt/hbar) / (1 + i theta) / n
  std::vector<cplx> current_hat_;
  std::vector<cplx> next_;
  std::vector<cplx> mid_;
  std::vector<cplx> source_;
};

Trajectory split_step(const WaveField& initial, const PhysicalParams& params,
                      const EvolveConfig& cfg, const StepObserver& observer = {});
Trajectory crank_nicolson(const WaveField& initial, const PhysicalParams& params,
                          const EvolveConfig& cfg, const StepObserver& observer = {});
/// Dispatches on cfg.scheme.
Trajectory evolve(const WaveField& initial, const PhysicalParams& params, const EvolveConfig& cfg,
                  const StepObserver& observer = {});

/// Pointwise residual of the evolution equation on three equally spaced snapshots:
/// max |i hbar (next - prev)/(2 dt) - H[cur] cur| over points with density above
/// density_floor * peak, divided by max |H[cur] cur| on the same points (floored at
/// (hbar^2 dk^2 / 2m) max|cur| so that a field with H psi = 0 is not divided by zero).
double pde_residual(const WaveField& prev, const WaveField& cur, const WaveField& next,
                    const PhysicalParams& params, double density_floor = kDefaultDensityFloor,
                    double log_clamp = kDefaultLogClamp);

}  // namespace lognls
