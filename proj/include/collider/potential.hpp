#pragma once

// Two Gaussian wells moving on mirror-symmetric parabolic trajectories:
//   mu(t)  = mu0  + a t^2 / 2
//   mu'(t) = mu0' - a t^2 / 2
//   V(x,t) = -V0 exp(-(x - mu)^2) - V0' exp(-((x - mu') / alpha)^2)
// (program units, l_G = sqrt(2) sigma).

#include <optional>
#include <span>

#include "collider/units_config.hpp"

namespace collider {

struct WellParameters {
  double V0 = 20.0;
  double V0_prime = 20.0;
  double alpha = 1.0;
  double mu0 = -3.5;
  double mu0_prime = 3.5;
  double acceleration = 0.0;

  static WellParameters from_config(const ExperimentConfig& config, const Kinematics& kinematics);
  /// Wells frozen at their initial positions (a = 0).
  static WellParameters static_wells(const ExperimentConfig& config);

  double initial_separation() const noexcept { return mu0_prime - mu0; }
  void validate() const;
};

struct TrajectorySample {
  double t;
  double mu;
  double mu_prime;
  double d;
};

TrajectorySample well_centers(const WellParameters& params, double t);

double potential_at(const WellParameters& params, double x, double t);

/// V(x_k, t) for every x in `xs`, written to `out`.
void sample_potential(const WellParameters& params, std::span<const double> xs, double t,
                      std::span<double> out);

/// V(0, t): the height of the central barrier.
double barrier_height(const WellParameters& params, double t);

/// Time at which the well centers coincide, sqrt(d0 / a) = t_f / sqrt(2).
double coincidence_time(const WellParameters& params);

struct Interval {
  double lo;
  double hi;
};

/// Full-width-at-half-maximum band of each well; nullopt marks a zero-depth
/// (absent) well.
struct FwhmBounds {
  std::optional<Interval> left;
  std::optional<Interval> right;
};

FwhmBounds fwhm_bounds(const WellParameters& params, double t);

}  // namespace collider
