#include <rgsl/structure_learner.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rgsl {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::rgsl: return "rgsl";
    case Variant::rgsl_minus: return "rgsl-minus";
    case Variant::frobenius: return "frobenius";
    case Variant::knn: return "knn";
    case Variant::fixed_adjacency: return "fixed-a";
  }
  return "unknown";
}

std::string_view to_string(GradientMode m) {
  return m == GradientMode::paper ? "paper" : "exact";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::rgsl, Variant::rgsl_minus, Variant::frobenius, Variant::knn,
                    Variant::fixed_adjacency}) {
    if (name == to_string(v)) return v;
  }
  throw InvalidInput("unknown variant '" + std::string(name) +
                     "' (expected rgsl, rgsl-minus, frobenius, knn, fixed-a)");
}

GradientMode parse_gradient_mode(std::string_view name) {
  if (name == "paper") return GradientMode::paper;
  if (name == "exact") return GradientMode::exact;
  throw InvalidInput("unknown gradient mode '" + std::string(name) + "' (expected paper, exact)");
}

void LearnConfig::validate() const {
  auto bad = [](const std::string& what) { throw InvalidInput("invalid config: " + what); };
  if (k < 0) bad("k must be >= 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) bad("alpha must be > 0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) bad("beta must be >= 0");
  if (variant == Variant::frobenius && !(beta > 0.0)) bad("frobenius variant needs beta > 0");
  if (!(epsilon >= 0.0)) bad("epsilon must be >= 0");
  if (!(lr > 0.0) || !std::isfinite(lr)) bad("lr must be > 0");
  if (max_epochs < 0) bad("epochs must be >= 0");
  if (!(tol >= 0.0)) bad("tol must be >= 0");
  if (mask_refresh < 1) bad("mask refresh interval must be >= 1");
  if (knn_k < 1) bad("knn K must be >= 1");
}

CandidateGraph init_candidate_graph(const FilteredFeatures& s) {
  CandidateGraph g;
  g.values.noalias() = s.values * s.values.transpose();
  return g;
}

Matrix symmetrize(const Matrix& g) {
  const Matrix a = g.cwiseAbs();
  return 0.5 * (a + a.transpose());
}

FilteredFeatures filtered_features(const Graph& g, const LearnConfig& cfg) {
  if (!cfg.normalize_features) return high_pass_filter(g, cfg.k);
  return high_pass_filter(g.with_features(row_normalize(g.features())), cfg.k);
}

LearnedGraph optimize_graph(CandidateGraph init, const DistanceMatrix& dist,
                            const MaskSchedule& schedule, const LearnConfig& cfg) {
  cfg.validate();
  Matrix g = std::move(init.values);
  const Index n = g.rows();
  AdamOptimizer adam(n, n, cfg.adam);

  LearnedGraph out;
  PositiveMask mask = schedule.fixed ? *schedule.fixed : update_positive_mask(g, cfg.epsilon);
  auto eval = evaluate_objective(g, dist, mask, cfg.beta, cfg.gradient_mode);
  if (!std::isfinite(eval.loss)) throw NumericalError("non-finite loss at initialization");
  out.loss_history.push_back(eval.loss);

  if (!std::isinf(cfg.tol)) {
    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
      adam.step(g, eval.gradient, cfg.lr);
      if (!g.allFinite()) {
        throw NumericalError("non-finite candidate graph entry at epoch " + std::to_string(epoch));
      }
      if (!schedule.fixed && epoch % cfg.mask_refresh == 0) {
        PositiveMask next = update_positive_mask(g, cfg.epsilon);
        if (!(next == mask)) ++out.mask_changes;
        mask = std::move(next);
      }
      eval = evaluate_objective(g, dist, mask, cfg.beta, cfg.gradient_mode);
      if (!std::isfinite(eval.loss)) {
        throw NumericalError("non-finite loss at epoch " + std::to_string(epoch));
      }
      const double prev = out.loss_history.back();
      out.loss_history.push_back(eval.loss);
      out.epochs = epoch;
      if (std::abs(eval.loss - prev) / std::max(std::abs(prev), 1.0) < cfg.tol) {
        out.converged = true;
        break;
      }
    }
  } else {
    out.converged = true;
  }

  out.c = symmetrize(g);
  out.final_mask = std::move(mask);
  return out;
}

namespace {

DistanceMatrix distances_for(const FilteredFeatures& s, const LearnConfig& cfg) {
  if (cfg.variant == Variant::rgsl_minus) return pairwise_squared_distance_matrix(s.values);
  return pairwise_distance_matrix(s.values, cfg.alpha);
}

}  // namespace

LearnedGraph learn_graph(const Graph& g, const LearnConfig& cfg) {
  cfg.validate();
  if (g.num_nodes() < 2) throw InvalidInput("learn_graph needs at least two nodes");
  const FilteredFeatures s = filtered_features(g, cfg);
  const DistanceMatrix dist = distances_for(s, cfg);
  return optimize_graph(init_candidate_graph(s), dist, {}, cfg);
}

Vector project_to_simplex(const Vector& v) {
  const Index n = v.size();
  if (n == 0) throw InvalidInput("cannot project an empty vector onto the simplex");
  Vector u = v;
  std::sort(u.data(), u.data() + n, std::greater<>());
  double cumsum = 0.0;
  double theta = 0.0;
  for (Index j = 0; j < n; ++j) {
    cumsum += u(j);
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u(j) - t > 0.0) theta = t;
  }
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

Vector frobenius_row_weights(const Vector& dist_row, double beta, std::optional<Index> excluded) {
  if (!(beta > 0.0)) throw InvalidInput("frobenius weights need beta > 0");
  const Index n = dist_row.size();
  if (!excluded) return project_to_simplex(-dist_row / (2.0 * beta));
  if (*excluded < 0 || *excluded >= n) throw InvalidInput("excluded index out of range");
  if (n < 2) throw InvalidInput("row needs at least one admissible entry");
  Vector reduced(n - 1);
  for (Index j = 0, r = 0; j < n; ++j) {
    if (j != *excluded) reduced(r++) = dist_row(j);
  }
  const Vector w = project_to_simplex(-reduced / (2.0 * beta));
  Vector out = Vector::Zero(n);
  for (Index j = 0, r = 0; j < n; ++j) {
    if (j != *excluded) out(j) = w(r++);
  }
  return out;
}

LearnedGraph learn_graph_frobenius(const Graph& g, const LearnConfig& cfg) {
  cfg.validate();
  if (!(cfg.beta > 0.0)) throw InvalidInput("frobenius variant needs beta > 0");
  const Index n = g.num_nodes();
  if (n < 2) throw InvalidInput("learn_graph_frobenius needs at least two nodes");
  const FilteredFeatures s = filtered_features(g, cfg);
  const DistanceMatrix dist = pairwise_distance_matrix(s.values, cfg.alpha);
  Matrix weights(n, n);
  for (Index i = 0; i < n; ++i) {
    weights.row(i) = frobenius_row_weights(dist.values.row(i).transpose(), cfg.beta, i).transpose();
  }
  LearnedGraph out;
  out.loss_history.push_back(dist.values.cwiseProduct(weights).sum() +
                             cfg.beta * weights.squaredNorm());
  out.converged = true;
  out.final_mask = mask_from_matrix(weights);
  out.c = symmetrize(weights);
  return out;
}

PositiveMask knn_mask(const Matrix& signals, int k_neighbors) {
  const Index n = signals.rows();
  if (k_neighbors < 1 || k_neighbors >= n) {
    throw InvalidInput("kNN needs 1 <= K < n, got K=" + std::to_string(k_neighbors) +
                       " with n=" + std::to_string(n));
  }
  const DistanceMatrix d = pairwise_squared_distance_matrix(signals);
  PositiveMask y{MaskMatrix::Zero(n, n), 0.0};
  std::vector<Index> order;
  for (Index i = 0; i < n; ++i) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    order.erase(order.begin() + i);
    std::partial_sort(order.begin(), order.begin() + k_neighbors, order.end(),
                      [&](Index a, Index b) {
                        const double da = d.values(i, a);
                        const double db = d.values(i, b);
                        return da < db || (da == db && a < b);
                      });
    for (int r = 0; r < k_neighbors; ++r) y.values(i, order[static_cast<std::size_t>(r)]) = 1;
  }
  return y;
}

LearnedGraph learn_graph_knn_positives(const Graph& g, const LearnConfig& cfg, int k_neighbors) {
  cfg.validate();
  const FilteredFeatures s = filtered_features(g, cfg);
  const DistanceMatrix dist = pairwise_distance_matrix(s.values, cfg.alpha);
  return optimize_graph(init_candidate_graph(s), dist, {knn_mask(s.values, k_neighbors)}, cfg);
}

LearnedGraph learn_graph_fixed_adjacency(const Graph& g, const LearnConfig& cfg) {
  cfg.validate();
  if (g.num_nodes() < 2) throw InvalidInput("need at least two nodes");
  const FilteredFeatures s = filtered_features(g, cfg);
  const DistanceMatrix dist = pairwise_distance_matrix(s.values, cfg.alpha);
  return optimize_graph(init_candidate_graph(s), dist, {mask_from_matrix(g.dense_adjacency())},
                        cfg);
}

LearnedGraph learn(const Graph& g, const LearnConfig& cfg) {
  switch (cfg.variant) {
    case Variant::rgsl:
    case Variant::rgsl_minus: return learn_graph(g, cfg);
    case Variant::frobenius: return learn_graph_frobenius(g, cfg);
    case Variant::knn: return learn_graph_knn_positives(g, cfg, cfg.knn_k);
    case Variant::fixed_adjacency: return learn_graph_fixed_adjacency(g, cfg);
  }
  throw InvalidInput("unhandled variant");
}

}  // namespace rgsl
