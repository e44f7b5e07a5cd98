#pragma once

#include <rgsl/adam.hpp>
#include <rgsl/filtering.hpp>
#include <rgsl/graph.hpp>
#include <rgsl/objective.hpp>
#include <rgsl/robust_metric.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rgsl {

enum class Variant {
  rgsl,             ///< alpha-norm cost, adaptive positive mask
  rgsl_minus,       ///< squared Euclidean cost, adaptive positive mask
  frobenius,        ///< alpha-norm cost + beta ||G||_F^2 on the row simplex
  knn,              ///< positives fixed to K nearest filtered-feature neighbors
  fixed_adjacency,  ///< positives fixed to the input adjacency
};

std::string_view to_string(Variant v);
std::string_view to_string(GradientMode m);
/// Throws InvalidInput for unknown names.
Variant parse_variant(std::string_view name);
GradientMode parse_gradient_mode(std::string_view name);

struct LearnConfig {
  int k = 1;              ///< filter order; 0 disables filtering
  double alpha = 1.0;
  double beta = 1.0;
  double epsilon = 1e-3;  ///< positive-mask threshold
  double lr = 0.01;
  int max_epochs = 500;
  /// Stop when |loss_t - loss_{t-1}| / max(|loss_{t-1}|, 1) < tol. An
  /// infinite tolerance performs no optimizer steps.
  double tol = 1e-5;
  std::uint64_t seed = 0;
  GradientMode gradient_mode = GradientMode::paper;
  Variant variant = Variant::rgsl;
  int mask_refresh = 1;  ///< epochs between positive-mask updates
  int knn_k = 10;
  bool normalize_features = false;
  AdamConfig adam;

  /// Throws InvalidInput describing the first invalid field.
  void validate() const;
};

struct CandidateGraph {
  Matrix values;
  int epoch = 0;
};

struct LearnedGraph {
  Matrix c;  ///< (|G| + |G|^T) / 2
  std::vector<double> loss_history;  ///< entry 0 is the loss at initialization
  PositiveMask final_mask;
  int epochs = 0;
  bool converged = false;
  /// Epochs at which the positive mask changed. Always 0 for fixed masks.
  int mask_changes = 0;
};

/// G = S S^T.
CandidateGraph init_candidate_graph(const FilteredFeatures& s);

/// (|G| + |G|^T) / 2.
Matrix symmetrize(const Matrix& g);

/// Filtered features for a config: optional row normalization, then
/// (L/2)^k X.
FilteredFeatures filtered_features(const Graph& g, const LearnConfig& cfg);

/// Positive-mask policy for the optimization loop.
struct MaskSchedule {
  /// Fixed mask; when empty the mask is recomputed from G with cfg.epsilon.
  std::optional<PositiveMask> fixed;
};

/// Adam loop on G against the given distances. Shared by every
/// gradient-based variant. Throws NumericalError naming the epoch when the
/// loss or G becomes non-finite.
LearnedGraph optimize_graph(CandidateGraph init, const DistanceMatrix& dist,
                            const MaskSchedule& schedule, const LearnConfig& cfg);

/// Full pipeline: filter, distances, G = S S^T, optimize, symmetrize.
LearnedGraph learn_graph(const Graph& g, const LearnConfig& cfg);

/// Closed-form ablation: each row minimizes <Dist_i, G_i> + beta ||G_i||^2
/// over the probability simplex on j != i.
LearnedGraph learn_graph_frobenius(const Graph& g, const LearnConfig& cfg);

/// Positives fixed to the K nearest neighbors (Euclidean, filtered space,
/// ties to the lower index). Directed: row i marks i's own neighbors.
LearnedGraph learn_graph_knn_positives(const Graph& g, const LearnConfig& cfg, int k_neighbors);

/// Positives fixed to the input adjacency.
LearnedGraph learn_graph_fixed_adjacency(const Graph& g, const LearnConfig& cfg);

/// Dispatches on cfg.variant.
LearnedGraph learn(const Graph& g, const LearnConfig& cfg);

/// Euclidean projection of v onto {w : w >= 0, sum w = 1}.
Vector project_to_simplex(const Vector& v);

/// Minimizer of <d, w> + beta ||w||^2 over the simplex, i.e. the projection
/// of -d / (2 beta). Entry `excluded` (if any) is pinned to zero.
Vector frobenius_row_weights(const Vector& dist_row, double beta,
                             std::optional<Index> excluded = std::nullopt);

/// Directed kNN mask over the rows of `signals`.
PositiveMask knn_mask(const Matrix& signals, int k_neighbors);

}  // namespace rgsl
