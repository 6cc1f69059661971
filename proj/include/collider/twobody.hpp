#pragma once

// Two-boson wavefunction on the n x n product grid and its evolution under
//   H = h(x1, t) + h(x2, t) + g delta(x1 - x2).
// The contact term is the grid delta: (g / dx) on the diagonal x1 = x2.
// Both real-time propagation and imaginary-time relaxation use the Strang
// split-step scheme: half kinetic, full potential + contact at the step
// midpoint, half kinetic.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "collider/grid.hpp"
#include "collider/potential.hpp"
#include "collider/units_config.hpp"

namespace collider {

struct TwoBodyModel {
  WellParameters wells;
  double g = 0.0;
};

class TwoBodyWavefunction {
 public:
  explicit TwoBodyWavefunction(GridPtr grid);
  TwoBodyWavefunction(GridPtr grid, Field amplitudes);

  /// Normalized symmetrized product (a(x1) b(x2) + b(x1) a(x2)).
  static TwoBodyWavefunction symmetrized_product(GridPtr grid, std::span<const Complex> a,
                                                 std::span<const Complex> b);

  const SpatialGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t n() const noexcept { return grid_->size(); }

  std::span<Complex> data() noexcept { return amplitudes_; }
  std::span<const Complex> data() const noexcept { return amplitudes_; }
  const Field& amplitudes() const noexcept { return amplitudes_; }

  Complex& operator()(std::size_t i1, std::size_t i2) { return amplitudes_[i1 * n() + i2]; }
  Complex operator()(std::size_t i1, std::size_t i2) const { return amplitudes_[i1 * n() + i2]; }

  /// sum |psi|^2 dx^2
  double norm_squared() const;
  void normalize();
  /// psi <- (psi + psi^T) / 2
  void symmetrize();
  /// ||(psi - psi^T)/2|| in the dx^2-weighted norm.
  double antisymmetric_norm() const;
  /// max |psi(i,j) - psi(j,i)|
  double max_exchange_asymmetry() const;

 private:
  GridPtr grid_;
  Field amplitudes_;
};

/// sum conj(a) b dx^2
Complex inner_product(const TwoBodyWavefunction& a, const TwoBodyWavefunction& b);

/// H psi at time t.
Field apply_hamiltonian(const TwoBodyWavefunction& psi, const TwoBodyModel& model, double t);

/// Precomputed split-step factors for one (complex) step length.
class SplitStepKernel {
 public:
  SplitStepKernel(GridPtr grid, TwoBodyModel model, Complex dt_eff);

  /// exp(-i T dt_eff) (full) or exp(-i T dt_eff / 2) (half), in place.
  void kinetic(std::span<Complex> psi, bool half) const;
  /// exp(-i (V(x1,t) + V(x2,t) + g/dx delta_12) dt_eff), in place.
  void potential(std::span<Complex> psi, double t) const;
  /// One full Strang step with the potential at t + Re(dt_eff)/2.
  void step(std::span<Complex> psi, double t) const;

  Complex dt_eff() const noexcept { return dt_eff_; }

 private:
  GridPtr grid_;
  TwoBodyModel model_;
  Complex dt_eff_;
  std::vector<Complex> kin_full_;
  std::vector<Complex> kin_half_;
  Complex contact_phase_;
  mutable std::vector<double> v_scratch_;
  mutable std::vector<Complex> phase_scratch_;
};

struct RelaxResult {
  TwoBodyWavefunction state;
  /// <H> of the relaxation model at convergence.
  double energy;
  std::size_t steps;
  /// Energy change per step at the last check.
  double last_delta;
};

/// Imaginary-time relaxation in the static potential of `model` at t = 0,
/// starting from the symmetrized product of unit-width Gaussians centered at
/// `center`.
RelaxResult imaginary_time_relax(const GridPtr& grid, const TwoBodyModel& model,
                                 const RelaxSpec& spec, double center);

/// Initial state: ground state with the second well switched off. Requires
/// model.wells.V0_prime == 0; the Gaussian seed is centered at mu0.
RelaxResult relax_ground_state(const GridPtr& grid, const TwoBodyModel& model,
                               const RelaxSpec& spec);

struct OutputSample {
  double t;
  std::size_t step;
  double norm_drift;
  double antisymmetric_norm;
};

struct PropagationOptions {
  double dt = 2.5e-4;
  std::size_t output_stride = 200;
  double max_norm_drift = 1e-6;
  /// Resume support: begin at this step index with psi0 being the state there.
  std::size_t start_step = 0;
  /// Invoked at output times whenever a multiple of checkpoint_interval has
  /// been passed (0 disables).
  double checkpoint_interval = 0.0;
  std::function<void(const TwoBodyWavefunction&, double t, std::size_t step)> checkpoint;
};

struct PropagationLog {
  std::vector<OutputSample> samples;
  std::size_t total_steps = 0;
  /// Step actually used: t_f / total_steps <= requested dt.
  double dt = 0.0;
  double final_time = 0.0;
};

using Observer = std::function<void(const TwoBodyWavefunction& psi, double t, std::size_t step)>;

/// Number of steps covering [0, t_f] with a step no larger than dt.
std::size_t step_count(double final_time, double dt);

/// Evolve psi from t = 0 (or the resume step) to t_f. The observer sees the
/// state at every output step (every output_stride steps and the final one).
/// psi holds the final state on return. Throws NumericError on norm drift
/// beyond the tolerance or NaN.
PropagationLog propagate(TwoBodyWavefunction& psi, const TwoBodyModel& model,
                         const Kinematics& kinematics, const PropagationOptions& options,
                         const Observer& observer);

}  // namespace collider
