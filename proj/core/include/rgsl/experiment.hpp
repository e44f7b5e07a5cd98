#pragma once

#include <rgsl/dataset_io.hpp>
#include <rgsl/diagnostics.hpp>
#include <rgsl/downstream.hpp>
#include <rgsl/metrics.hpp>
#include <rgsl/structure_learner.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rgsl {

enum class Task { cluster, classify, robustness, diagnose };

std::string_view to_string(Task t);

/// Published per-dataset settings.
struct DatasetPreset {
  std::string_view name;
  int k;
  double alpha;
  double beta;
  double lr;
  double epsilon;
};

/// Case-insensitive lookup by dataset name ("texas", "Roman-empire", ...).
std::optional<DatasetPreset> find_preset(std::string_view dataset_name);

struct ExperimentConfig {
  std::string dataset;
  Task task = Task::diagnose;
  LearnConfig learn;

  // cluster
  std::optional<int> clusters;
  int spectral_runs = 10;          ///< spectral seeds spectral_seed, spectral_seed + 1, ...
  std::uint64_t spectral_seed = 0;

  // classify / robustness
  double gamma = 0.1;
  bool lgc_self_loop = false;
  std::vector<std::uint64_t> split_seeds;  ///< empty means 0 .. splits-1
  int splits = 10;

  // robustness
  std::vector<double> rates{0.25, 0.5, 1.0};
  int noise_seeds = 10;
  std::vector<Variant> variants{Variant::rgsl, Variant::rgsl_minus};

  OutlierPolicy outliers;
  std::filesystem::path out_dir;
  double dump_threshold = 1e-8;

  /// Throws ConfigError naming the first missing or invalid field.
  void validate() const;
  std::vector<std::uint64_t> effective_split_seeds() const;
};

struct ClusterRun {
  std::uint64_t seed = 0;
  ClusteringScores scores;
  std::vector<int> labels;
};

struct ClusterResult {
  LearnedGraph graph;
  double mask_homophily = 0.0;  ///< homophily of the final positive-mask support
  std::vector<ClusterRun> runs;
};

struct ClassifyRun {
  std::uint64_t split_seed = 0;
  double test_accuracy = 0.0;
  double val_accuracy = 0.0;
  std::vector<int> predictions;
};

struct ClassifyResult {
  LearnedGraph graph;
  std::vector<ClassifyRun> runs;
};

struct RobustnessRow {
  Variant variant = Variant::rgsl;
  double rate = 0.0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
};

/// Learns the graph once and clusters it with cfg.spectral_runs seeds.
ClusterResult run_clustering(const Graph& g, const ExperimentConfig& cfg);

/// Learns the graph once (unsupervised) and runs LGC on each split.
ClassifyResult run_classification(const Graph& g, const ExperimentConfig& cfg);

/// LGC accuracy of one learned affinity on one dense split.
ClassifyRun classify_split(const Matrix& affinity, const Graph& g, std::uint64_t split_seed,
                           const ExperimentConfig& cfg);

/// For every variant, rate and noise seed: perturb, learn, split with the
/// noise seed, classify, record test accuracy.
std::vector<RobustnessRow> run_robustness(const Graph& g, const ExperimentConfig& cfg);

struct EvalReport {
  std::vector<std::string> records;  ///< JSON objects, one per seed, fixed field order
  std::string table;                 ///< human-readable summary
  std::vector<std::filesystem::path> files;
};

/// Runs the task on a loaded dataset. When cfg.out_dir is set, writes
/// metrics.jsonl, summary.txt and the task outputs (learned_graph.txt,
/// cluster_labels.tsv, predictions.tsv, robustness.csv) there.
EvalReport run_task(const Dataset& ds, const ExperimentConfig& cfg);

/// Validates cfg, loads cfg.dataset (see resolve_dataset_path) and runs it.
EvalReport run_experiment(const ExperimentConfig& cfg);

}  // namespace rgsl
