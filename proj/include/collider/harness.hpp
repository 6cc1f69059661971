#pragma once

// Run orchestration behind the command-line tool: ground-state relaxation,
// single propagations, twin sweeps over v_f^-1 and sweep analysis. All file
// layouts live here.
//
// Run directory:
//   config.txt       canonical configuration
//   manifest.txt     status, config hash, kinematics, file inventory
//   timeseries.csv   one row per output time (see timeseries_columns)
//   spectrum.csv     t, d, barrier, eps_0 .. eps_{k-1}
//   occupations.csv  t, p_0 .. p_{k-1}
//   density.csv      (t, x, rho[, log10_rho]) triples, optional
//   checkpoint.bin   latest resume point, optional
//   final_state.bin  wavefunction at t_f, optional
//
// Sweep directory:
//   config.txt, manifest.txt, ground_state.bin, summary.csv,
//   points/<index>_two_well/ and points/<index>_single_well/ run directories.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "collider/analysis.hpp"
#include "collider/io.hpp"
#include "collider/observables.hpp"
#include "collider/twobody.hpp"
#include "collider/units_config.hpp"

namespace collider {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // unexpected error or failed sweep points
  kExitConfig = 2,   // unreadable, malformed or invalid configuration; usage
  kExitNumeric = 3,  // non-convergence, norm drift, NaN
  kExitIo = 4,       // file-system or file-format failure
};

/// Maps the active exception to an exit code and prints it to stderr.
int report_exception(const std::exception& e);

using Logger = std::function<void(const std::string&)>;

/// Key of the relaxed initial state: it depends only on the grid, V0, mu0, g
/// and the relaxation settings.
std::uint64_t ground_state_hash(const ExperimentConfig& config);

struct GroundState {
  TwoBodyWavefunction state;
  /// Energy of the relaxation Hamiltonian (V0' = 0).
  double relaxed_energy = 0.0;
  /// <H> with both wells at t = 0.
  EnergyDecomposition energy;
  std::size_t steps = 0;
  double last_delta = 0.0;
};

/// Relaxes the initial state (or loads `cache` when it holds a state with a
/// matching key) and writes it there when given.
GroundState prepare_ground_state(const ExperimentConfig& config, const GridPtr& grid,
                                 const std::optional<std::filesystem::path>& cache = std::nullopt,
                                 const Logger& log = {});

/// relax: writes ground_state.bin, energy.txt and manifest.txt into `out`.
GroundState cmd_relax(const ExperimentConfig& config, const std::filesystem::path& out, const Logger& log = {});

struct RunOptions {
  bool resume = false;
  bool snapshot_wavefunction = false;
  /// Overrides config.output.write_density when set.
  std::optional<bool> write_density;
};

std::vector<std::string> timeseries_columns();

/// Time series of a finished run directory, as used by the analysis.
struct RunData {
  Table timeseries;
  Table spectrum;
  RunSeries series;
  TimeSeriesRecord final_record;
};

RunData load_run(const std::filesystem::path& dir);

/// propagate: evolves psi0 (or a resumed checkpoint) to t_f and writes the run
/// directory. Skips the work when `resume` is set and the directory already
/// holds a completed run with the same configuration hash.
RunData cmd_propagate(const ExperimentConfig& config, const TwoBodyWavefunction& psi0,
                      const std::filesystem::path& out, const RunOptions& options, const Logger& log = {});

/// Same, with the initial state read from a checkpoint file (grid must match)
/// or relaxed on the fly when `initial_state` is empty.
RunData cmd_propagate(const ExperimentConfig& config, const std::optional<std::filesystem::path>& initial_state,
                      const std::filesystem::path& out, const RunOptions& options, const Logger& log = {});

struct SweepOptions {
  std::size_t workers = 1;
  bool resume = false;
  /// Run the V0' = 0 twin of every point even if the config does not ask for it.
  bool single_well_twin = false;
  bool snapshot_wavefunction = false;
};

struct SweepOutcome {
  SweepResult result;
  std::vector<std::string> failures;
};

/// sweep: every point of config.sweep (and twins), then summary.csv. Output
/// files do not depend on the worker count or scheduling order.
SweepOutcome cmd_sweep(const ExperimentConfig& config, const std::filesystem::path& out,
                       const SweepOptions& options, const Logger& log = {});

std::vector<std::string> summary_columns();
Table summary_table(const SweepResult& result, const std::string& config_hash);
SweepResult sweep_from_summary(const Table& summary);

struct AnalysisOptions {
  /// Restrict the cosine fit, staircase and entropy peak to this v_f^-1 range.
  double fit_min = -std::numeric_limits<double>::infinity();
  double fit_max = std::numeric_limits<double>::infinity();
  double peak_prominence = kDefaultPeakProminence;
};

struct DipoleSummary {
  std::vector<double> v_final_inverse;
  std::vector<double> period;
  std::vector<double> phase;
};

struct AnalysisReport {
  std::size_t points = 0;
  CosineFit cosine;
  std::optional<double> staircase_width;
  bool twins = false;
  std::vector<Peak> emission_peaks;
  std::optional<double> energy_zero_two_well;
  std::optional<double> energy_zero_single_well;
  std::optional<EntropyPeak> entropy;
  DipoleSummary dipole;
  double max_lambda6 = 0.0;
  std::vector<std::string> notices;

  std::string to_text() const;
};

inline constexpr double kPronouncedDipoleRms = 0.05;

AnalysisReport analyze(const SweepResult& sweep, const AnalysisOptions& options = {});

/// analyze: reads summary.csv in `sweep_dir`, writes report.txt next to it.
AnalysisReport cmd_analyze(const std::filesystem::path& sweep_dir, const AnalysisOptions& options = {});

/// export-figure-data: derived plot inputs. For a run directory writes
/// trajectory.csv (well centres, FWHM bands, barrier); for a sweep directory
/// writes delta_untrapped.csv and cosine_fit.csv.
void cmd_export_figure_data(const std::filesystem::path& dir, const std::filesystem::path& out);

}  // namespace collider
