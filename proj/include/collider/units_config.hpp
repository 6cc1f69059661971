#pragma once

// Unit system and experiment configuration.
//
// All quantities are dimensionless. With sigma the well width and m the boson
// mass, the units are
//   length  l_G = sqrt(2) sigma
//   energy  E_G = hbar^2 / (2 m sigma^2)
//   time    t_G = 2 m sigma^2 / hbar
//   speed   v_G = hbar / (sqrt(2) m sigma) = l_G / t_G
// so hbar = m = 1 in program units and the one-body Hamiltonian is
//   h = -(1/2) d^2/dx^2 + V(x, t).
// There is no runtime unit conversion.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collider {

enum class Boundary { Periodic, HardWall };

std::string_view to_string(Boundary b);

struct GridSpec {
  std::size_t n = 675;
  double x_min = -7.0;
  double x_max = 7.0;
  Boundary boundary = Boundary::Periodic;

  void validate() const;
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct RelaxSpec {
  /// Convergence threshold on the energy change per step (E_G).
  double tolerance = 1e-10;
  std::size_t max_steps = 200000;
  /// Imaginary-time steps are reduced geometrically from initial_step to
  /// final_step; each stage runs to convergence.
  double initial_step = 1e-2;
  double final_step = 1e-4;
  std::size_t check_interval = 10;

  void validate() const;
};

struct SweepSpec {
  double v_inverse_min = 0.1;
  double v_inverse_max = 2.5;
  std::size_t count = 50;
  bool include_single_well = false;

  void validate() const;
};

struct OutputSpec {
  bool write_density = true;
  bool density_log10 = false;
  /// Wall-clock independent checkpoint period in t_G; 0 disables.
  double checkpoint_interval = 0.0;
};

struct ExperimentConfig {
  // [potential]
  double V0 = 20.0;
  double V0_prime = 20.0;
  double alpha = 1.0;
  double mu0 = -3.5;
  double mu0_prime = 3.5;
  double g = 0.5;
  // [kinematics]: exactly one for a single run, none for a sweep template.
  std::optional<double> v_final_inverse;
  std::optional<double> acceleration;
  // [grid]
  GridSpec grid;
  // [propagation]
  double dt = 2.5e-4;
  std::size_t output_stride = 200;
  double max_norm_drift = 1e-6;
  // [relaxation]
  RelaxSpec relaxation;
  // [observables]
  std::size_t eigensolver_count = 40;
  std::size_t entropy_normalization = 6;
  // [output]
  OutputSpec output;
  // [sweep]
  std::optional<SweepSpec> sweep;

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  /// Canonical text form; parse_config(to_text()) reproduces the config.
  std::string to_text() const;

  /// FNV-1a hash of the canonical text of every section except [output].
  std::uint64_t hash() const;
  std::string hash_hex() const;
};

struct Kinematics {
  double acceleration;
  double final_time;
  double final_speed;
  double initial_separation;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Requires exactly one of acceleration / v_final_inverse.
Kinematics derive_kinematics(const ExperimentConfig& config);

/// Equally spaced inverse final speeds, endpoints included.
std::vector<double> sweep_points(const SweepSpec& spec);

/// Copy of `config` with kinematics fixed by an inverse final speed and the
/// sweep section removed.
ExperimentConfig with_inverse_speed(const ExperimentConfig& config, double v_final_inverse);

/// Copy of `config` with the second well switched off (V0' = 0).
ExperimentConfig single_well_twin(const ExperimentConfig& config);

/// Decimal with 17 significant digits (round-trips every double).
std::string format_number(double value);

std::uint64_t fnv1a(std::string_view text);

}  // namespace collider
