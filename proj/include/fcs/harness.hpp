#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcs/estimators.hpp"
#include "fcs/generators.hpp"

namespace fcs {

enum class ExperimentKind { mc_sweep, approx_check, jackknife_sweep };

struct SweepAxes {
  std::vector<Count> node_counts{4000};
  std::vector<double> qs{0.1};
  std::vector<int> budgets{10};
};

/// Per-family parameter ranges for the approximation-error study; values are
/// drawn uniformly per generated network.
struct ApproxFamilyParams {
  std::pair<double, double> sw_mean_degree{100.0, 200.0};
  std::pair<int, int> ba_attachment{12, 40};
  std::pair<int, int> hk_attachment{20, 40};
  std::pair<double, double> hk_triad_probability{0.1, 0.9};
  std::pair<int, int> rrt_attachment{2, 5};
};

/// One experiment, loadable from a single JSON document. Unknown keys are
/// rejected so that misspelled options fail loudly.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::mc_sweep;
  GeneratorConfig generator;
  SweepAxes sweep;
  int trials = 100;  // per sweep cell
  std::uint64_t seed = 0;
  std::string out;
  /// Populate the elapsed_ms column with wall-clock inference times. Off by
  /// default: timing values vary run to run, and the default output contract
  /// is byte-identical CSV for a fixed seed.
  bool timing = false;
  PipelineOptions estimator;
  bool jackknife_second_moments = false;
  int repetitions = 20;  // jackknife_sweep: surveys per q value
  // approx_check
  std::vector<GeneratorModel> families{GeneratorModel::modified_ws,
                                       GeneratorModel::holme_kim,
                                       GeneratorModel::ba, GeneratorModel::rrt};
  int family_count = 1000;
  Count family_size = 1000;
  ApproxFamilyParams approx;

  void validate() const;
  static ExperimentConfig from_json(const nlohmann::json& doc);
  static ExperimentConfig load_file(const std::string& path);
};

/// Monte Carlo sweep: per cell (node count, q, budget) and trial, generate a
/// two-layer network, survey it, run the pipeline and record the estimates
/// next to the ground truth. Rows are ordered by (cell, trial) regardless of
/// the parallel schedule; per-trial failures are recorded in the row and the
/// run continues. Surveys drawing zero seeds are redrawn with a derived
/// sub-seed and counted in the `retries` column.
void run_mc_sweep(const ExperimentConfig& config, std::ostream& out);

/// Mean-degree approximation study: per family and network, the exact
/// inverse-degree sum over weak links
///     Y = sum_i sum_{j in N_i} 1 / (k_i k_j)
/// against its mean-degree approximation N / K.
void run_approx_check(const ExperimentConfig& config, std::ostream& out);

/// Jackknife study over the sampling probability axis: per q and repetition,
/// survey a fresh network and record jackknife mean/sd of the first-moment
/// estimators next to the truth.
void run_jackknife_sweep(const ExperimentConfig& config, std::ostream& out);

/// Aggregates a trial CSV (run_mc_sweep output) into per-cell median/IQR
/// tables of the estimate/truth ratios.
void aggregate_report(std::istream& trials_csv, std::ostream& out,
                      bool as_json);

/// The exact inverse-degree sum Y = sum_i sum_{j in N_i} 1/(k_i k_j);
/// equals N / K for regular graphs. Isolated nodes contribute nothing.
double inverse_degree_sum(const Graph& g);

// CSV helpers shared with the CLI and tests.
std::vector<std::string> parse_csv_line(const std::string& line);
double quantile(std::vector<double> values, double p);

}  // namespace fcs
