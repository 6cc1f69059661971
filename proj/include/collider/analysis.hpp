#pragma once

// Post-processing of single runs and of sweeps over the inverse final speed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collider/observables.hpp"

namespace collider {

/// Window in which eps_2 lies above the barrier V(0, t) (transport stage).
struct StageBoundaries {
  bool present = false;
  double t_start = 0.0;
  double t_end = 0.0;
};

/// First and last time eps_2(t) > V(0, t), linearly interpolated between
/// samples. `level` is the eps_2 series (0-based energetic index 2).
StageBoundaries stage_boundaries(std::span<const double> t, std::span<const double> level,
                                 std::span<const double> barrier);

inline constexpr double kZeroCrossingDebounce = 1e-9;

/// Sign changes of x(t) for samples strictly inside the window. Samples with
/// |x| < 1e-9 are dropped so grazing zeros are counted once.
std::size_t count_zero_crossings(std::span<const double> t, std::span<const double> x,
                                 const StageBoundaries& window);
/// Over the whole trace.
std::size_t count_zero_crossings(std::span<const double> x);

/// x(v) = amplitude cos(2 pi v / period + phase) + offset.
struct CosineFit {
  double period = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double offset = 0.0;
  double rms_residual = 0.0;
  /// 1 - SS_res / SS_const.
  double residual_reduction = 0.0;
  bool degenerate = false;
  /// Empty on success; otherwise why the fit is not usable.
  std::string issue;

  bool ok() const { return issue.empty(); }
};

/// Coarse log-spaced scan over the period with a linear least-squares solve
/// for (A cos phi, A sin phi, c) per candidate, then golden-section refinement.
/// Needs >= 8 points and a best period no longer than span / 1.5.
CosineFit fit_cosine(std::span<const double> v, std::span<const double> x);

struct Extremum {
  double t;
  double value;
  bool maximum;
};

/// Interior local extrema with parabolic sub-sample refinement.
std::vector<Extremum> find_extrema(std::span<const double> t, std::span<const double> x);

struct DipoleMetrics {
  double period = 0.0;
  double period_plus = 0.0;
  double period_minus = 0.0;
  /// Phase of X+ relative to X-, in (-pi, pi]: 2 pi (t_+ - t_-) / period
  /// averaged on the circle over matched extrema.
  double phase = 0.0;
  /// RMS of the detrended signals.
  double rms_plus = 0.0;
  double rms_minus = 0.0;
  std::size_t extrema_plus = 0;
  std::size_t extrema_minus = 0;
  std::string issue;

  bool ok() const { return issue.empty(); }
};

/// Dipole oscillation of the truncated centers of mass in [t0, t1]. Each
/// signal has its quadratic trend removed (the wells move on parabolas), then
/// the period is twice the mean spacing of successive extrema.
DipoleMetrics dipole_metrics(std::span<const double> t, std::span<const double> x_plus,
                             std::span<const double> x_minus, double t0, double t1);

struct Peak {
  double location;
  double height;
  double prominence;
  std::size_t index;
};

inline constexpr double kDefaultPeakProminence = 0.05;

/// Interior local maxima with prominence >= min_prominence; locations refined
/// by the parabola through the peak triple; heights are the sample values.
std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double min_prominence = kDefaultPeakProminence);

/// Per-output-time columns of one run used by the run summary.
struct RunSeries {
  std::vector<double> t;
  std::vector<double> X;
  std::vector<double> X_plus;
  std::vector<double> X_minus;
  std::vector<double> eps2;
  std::vector<double> barrier;
  std::vector<double> lambda6;
};

struct RunSummary {
  StageBoundaries stage2;
  std::size_t zero_crossings_stage2 = 0;
  std::size_t zero_crossings_total = 0;
  DipoleMetrics dipole;
  double max_lambda6 = 0.0;
};

RunSummary summarize_run(const RunSeries& series);

struct TwinSummary {
  double M_U = 0.0;
  double energy = 0.0;
  double max_lambda6 = 0.0;
};

/// One row of a sweep: the two-well run at t_f and, optionally, its V0' = 0 twin.
struct SweepPoint {
  double v_final_inverse = 0.0;
  double acceleration = 0.0;
  double final_time = 0.0;
  TimeSeriesRecord final_record;
  RunSummary run;
  std::optional<TwinSummary> twin;
};

struct SweepResult {
  /// Sorted by v_final_inverse.
  std::vector<SweepPoint> points;
  bool has_twins() const;
};

struct DeltaUntrapped {
  std::vector<double> v_final_inverse;
  std::vector<double> delta;
};

/// M_U(two wells) - M_U(single well) at t_f. Throws std::invalid_argument
/// listing the points without a twin.
DeltaUntrapped delta_untrapped(const SweepResult& sweep);

/// Mean width in v_f^-1 of the steps of the N_ZC staircase: transitions sit at
/// midpoints between neighbours with different counts; the width is the span
/// from the first to the last transition divided by the count increase in
/// between. nullopt with fewer than two transitions.
std::optional<double> staircase_mean_width(std::span<const double> v, std::span<const double> counts);

/// Largest v at which y changes sign from positive (smaller v) to
/// non-positive, linearly interpolated.
std::optional<double> last_downward_zero(std::span<const double> v, std::span<const double> y);

struct EntropyPeak {
  double v_final_inverse = 0.0;
  double ratio = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::size_t index = 0;
};

/// Largest S1 / ln M over the sweep; the location is parabola-refined, the
/// values are those of the sample.
std::optional<EntropyPeak> entropy_peak(const SweepResult& sweep);

}  // namespace collider
