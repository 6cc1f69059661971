#pragma once

// Instantaneous one-body Hamiltonian h = -(1/2) d^2/dx^2 + V(x, t), its
// lowest eigenpairs in energetic order, and the classification of those
// states relative to the central barrier V(0, t).

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "collider/grid.hpp"
#include "collider/potential.hpp"

namespace collider {

class OneBodyOperator {
 public:
  OneBodyOperator(GridPtr grid, std::vector<double> potential, double t);

  const SpatialGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  const std::vector<double>& potential() const noexcept { return potential_; }
  double time() const noexcept { return t_; }

  /// f -> -(1/2) f'' + V f.
  Field apply(std::span<const Complex> f) const;

  /// Dense symmetric matrix in the point basis.
  Eigen::MatrixXd dense() const;

 private:
  GridPtr grid_;
  std::vector<double> potential_;
  double t_;
};

OneBodyOperator assemble_h(GridPtr grid, const WellParameters& params, double t);

struct EigenDecomposition {
  double t = 0.0;
  /// V(0, t).
  double barrier = 0.0;
  /// Ascending eigenvalues.
  std::vector<double> energies;
  /// Column i holds Phi_i on the grid, normalized so that sum |Phi_i|^2 dx = 1.
  /// The largest-magnitude component of every column is positive.
  Eigen::MatrixXd states;
  /// Max residual ||h phi - eps phi|| over the returned pairs (unit vectors).
  double max_residual = 0.0;

  std::size_t count() const noexcept { return energies.size(); }
};

/// The `count` lowest eigenpairs. Throws NumericError if any residual exceeds
/// `residual_tolerance`.
EigenDecomposition eigendecompose(const OneBodyOperator& op, std::size_t count,
                                  double barrier, double residual_tolerance = 1e-9);

/// Convenience: assemble at time t and decompose; barrier = V(0, t).
EigenDecomposition instantaneous_spectrum(const GridPtr& grid, const WellParameters& params,
                                          double t, std::size_t count);

struct StateClassification {
  /// eps < V(0, t)
  std::vector<std::size_t> under_barrier;
  /// V(0, t) <= eps < 0
  std::vector<std::size_t> over_barrier_trapped;
  /// eps >= 0
  std::vector<std::size_t> untrapped;
};

StateClassification classify(const EigenDecomposition& eig);

/// P_T = sum over eps_i < 0 of |Phi_i><Phi_i|.
class TrappedProjector {
 public:
  TrappedProjector(Eigen::MatrixXd basis, double dx);

  std::size_t rank() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  /// Trace of the projector (equals rank for an orthonormal basis).
  double trace() const;
  Field apply(std::span<const Complex> f) const;
  /// Unit-vector basis (columns Phi_i sqrt(dx)).
  const Eigen::MatrixXd& basis() const noexcept { return basis_; }

 private:
  Eigen::MatrixXd basis_;
};

TrappedProjector trapped_projector(const EigenDecomposition& eig, double dx);

}  // namespace collider
