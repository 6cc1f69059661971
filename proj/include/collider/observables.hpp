#pragma once

// Per-time physical quantities of the two-boson state.
//
// Conventions: the one-body density integrates to N = 2; the one-body density
// matrix has unit trace (per particle), so its eigenvalues (natural
// populations) sum to 1 and p_j = <Phi_j| rho |Phi_j> lies in [0, 1].

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "collider/onebody.hpp"
#include "collider/twobody.hpp"

namespace collider {

inline constexpr int kParticleCount = 2;

struct DensityProfile {
  double t = 0.0;
  std::vector<double> rho;
};

/// rho(x) = 2 sum_y |psi(x, y)|^2 dx.
DensityProfile one_body_density(const TwoBodyWavefunction& psi, double t = 0.0);

struct OneBodyDensityMatrix {
  double t = 0.0;
  /// Discrete operator (psi dx)(psi dx)^dagger: Hermitian, unit trace. The
  /// kernel rho(x, x') is matrix / dx.
  Eigen::MatrixXcd matrix;
  double dx = 1.0;
};

OneBodyDensityMatrix obdm(const TwoBodyWavefunction& psi, double t = 0.0);

/// Eigenvalues of the one-body density matrix, descending.
std::vector<double> natural_populations(const OneBodyDensityMatrix& dm);

struct Entropy {
  double s1 = 0.0;
  /// s1 / ln(M)
  double ratio = 0.0;
};

inline constexpr double kEntropyCutoff = 1e-14;

/// S1 = -sum lambda ln lambda over lambda > 1e-14; ratio uses S_max = ln M.
Entropy von_neumann_entropy(const std::vector<double>& populations, std::size_t normalization_m = 6);
Entropy von_neumann_entropy(const OneBodyDensityMatrix& dm, std::size_t normalization_m = 6);

/// <X> = (1/N) sum x rho(x) dx.
double center_of_mass(const DensityProfile& density, const SpatialGrid& grid);
double center_of_mass(const TwoBodyWavefunction& psi);

enum class Side { Positive, Negative };

/// <X^+-> = (1/N) sum x Theta(+-x) rho(x) dx with Theta(0) = 1/2.
double truncated_com(const DensityProfile& density, const SpatialGrid& grid, Side side);
double truncated_com(const TwoBodyWavefunction& psi, Side side);

struct EnergyDecomposition {
  double total = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  double interaction = 0.0;
};

EnergyDecomposition energy_decomposition(const TwoBodyWavefunction& psi, const TwoBodyModel& model,
                                         double t);

/// Coefficients C = Phi^T psi dx^(3/2) used by both the occupations and M_B:
/// row j is the amplitude of a particle in Phi_j.
Eigen::MatrixXcd eigenbasis_coefficients(const TwoBodyWavefunction& psi, const EigenDecomposition& eig);

/// p_j = <Phi_j| rho |Phi_j>. Throws std::invalid_argument if psi_t and eig.t
/// differ.
std::vector<double> eigen_occupations(const TwoBodyWavefunction& psi, double psi_t,
                                      const EigenDecomposition& eig);
std::vector<double> eigen_occupations(const Eigen::MatrixXcd& coefficients);

struct ProjectorOccupations {
  double O_A = 0.0;
  double O_B = 0.0;
  double O_C = 0.0;
};

/// O_A, O_B from the occupations of the under-barrier and trapped
/// over-barrier sets; O_C = 1 - O_A - O_B.
ProjectorOccupations projector_occupations(const std::vector<double>& occupations,
                                           const StateClassification& classes);

/// M_U = 1 - <psi| P_T (x) P_T |psi>.
double untrapped_fraction(const TwoBodyWavefunction& psi, const EigenDecomposition& eig);
double untrapped_fraction(const Eigen::MatrixXcd& coefficients, const EigenDecomposition& eig);

inline constexpr std::size_t kReportedPopulations = 8;

struct TimeSeriesRecord {
  double t = 0.0;
  double d = 0.0;
  double barrier = 0.0;
  double X = 0.0;
  double X_plus = 0.0;
  double X_minus = 0.0;
  EnergyDecomposition energy;
  ProjectorOccupations projections;
  double M_U = 0.0;
  Entropy entropy;
  /// Largest natural populations, descending, padded with zeros.
  std::vector<double> lambdas;
  std::vector<double> occupations;
  std::size_t trapped_count = 0;
  double norm = 1.0;
  double antisymmetric_norm = 0.0;
};

struct ObservableBundle {
  TimeSeriesRecord record;
  EigenDecomposition spectrum;
  DensityProfile density;
};

/// Everything reported at one output time.
ObservableBundle evaluate_observables(const TwoBodyWavefunction& psi, const TwoBodyModel& model,
                                      double t, std::size_t eigensolver_count,
                                      std::size_t entropy_normalization = 6);

}  // namespace collider
