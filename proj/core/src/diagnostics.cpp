#include <rgsl/diagnostics.hpp>

#include <cmath>
#include <numeric>
#include <string>

namespace rgsl {

namespace {

void require_rows(const Matrix& signals, const Graph& g) {
  if (signals.rows() != g.num_nodes()) {
    throw InvalidInput("signal matrix has " + std::to_string(signals.rows()) +
                       " rows, graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
}

}  // namespace

double homophily(const Graph& g) {
  const auto& labels = g.labels();
  const Index n = g.num_nodes();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (Index v = 0; v < n; ++v) {
    const auto& nbrs = g.neighbors()[v];
    if (nbrs.empty()) continue;
    std::size_t same = 0;
    for (Index u : nbrs) same += labels[u] == labels[v] ? 1 : 0;
    total += static_cast<double>(same) / static_cast<double>(nbrs.size());
  }
  return total / static_cast<double>(n);
}

double support_homophily(const Matrix& support, std::span<const int> labels) {
  const Index n = support.rows();
  if (support.cols() != n || static_cast<Index>(labels.size()) != n) {
    throw InvalidInput("support must be square with one label per row");
  }
  if (n == 0) return 0.0;
  double total = 0.0;
  for (Index v = 0; v < n; ++v) {
    std::size_t deg = 0;
    std::size_t same = 0;
    for (Index u = 0; u < n; ++u) {
      if (u == v || support(v, u) == 0.0) continue;
      ++deg;
      same += labels[u] == labels[v] ? 1 : 0;
    }
    if (deg > 0) total += static_cast<double>(same) / static_cast<double>(deg);
  }
  return total / static_cast<double>(n);
}

double sparsity(const Graph& g) {
  const double n = static_cast<double>(g.num_nodes());
  if (n == 0.0) return 0.0;
  return 2.0 * static_cast<double>(g.num_edges()) / (n * n);
}

double dirichlet_energy(const Matrix& signals, const Graph& g) {
  require_rows(signals, g);
  const Eigen::SparseMatrix<double> l = sparse_normalized_laplacian(g);
  const Matrix ls = l * signals;
  return signals.cwiseProduct(ls).sum();
}

double dirichlet_energy_edge_sum(const Matrix& signals, const Graph& g) {
  require_rows(signals, g);
  double total = 0.0;
  for (const auto& [i, j] : g.edges()) {
    total += (signals.row(i) - signals.row(j)).squaredNorm();
  }
  return total;
}

Vector node_dirichlet_energy(const Matrix& signals, const Graph& g) {
  require_rows(signals, g);
  const Index n = g.num_nodes();
  Vector scale(n);
  for (Index i = 0; i < n; ++i) scale(i) = 1.0 / std::sqrt(static_cast<double>(g.degree(i) + 1));
  Vector energy = Vector::Zero(n);
  for (const auto& [i, j] : g.edges()) {
    const double e = (signals.row(i) * scale(i) - signals.row(j) * scale(j)).squaredNorm();
    // Each unordered edge appears twice in the ordered sum, halved once.
    energy(i) += 0.5 * e;
    energy(j) += 0.5 * e;
  }
  return energy;
}

std::vector<Index> degree_outliers(const Graph& g, const OutlierPolicy& policy) {
  const Index n = g.num_nodes();
  std::vector<Index> out;
  if (n == 0) return out;
  double mean = 0.0;
  for (Index i = 0; i < n; ++i) mean += static_cast<double>(g.degree(i));
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double d = static_cast<double>(g.degree(i)) - mean;
    var += d * d;
  }
  const double sd = std::sqrt(var / static_cast<double>(n));
  const double cutoff = mean + policy.high_degree_sigmas * sd;
  for (Index i = 0; i < n; ++i) {
    const auto d = g.degree(i);
    if (d == 1 || static_cast<double>(d) > cutoff) out.push_back(i);
  }
  return out;
}

OutlierEnergy outlier_energy_ratio(const Graph& g, const Matrix& signals,
                                   const OutlierPolicy& policy) {
  const Vector energy = node_dirichlet_energy(signals, g);
  const auto outliers = degree_outliers(g, policy);
  OutlierEnergy result;
  result.count = outliers.size();
  const double total = energy.sum();
  if (total <= 0.0 || outliers.empty()) return result;
  double share = 0.0;
  for (Index v : outliers) share += energy(v) / total;
  result.ratio = share / static_cast<double>(outliers.size());
  return result;
}

DiagnosticsReport diagnose(const Graph& g, const OutlierPolicy& policy) {
  DiagnosticsReport r;
  r.homophily = g.has_labels() ? homophily(g) : 0.0;
  r.sparsity = sparsity(g);
  r.dirichlet_energy = dirichlet_energy(g.features(), g);
  const auto o = outlier_energy_ratio(g, g.features(), policy);
  r.outlier_ratio = o.ratio;
  r.outlier_count = o.count;
  return r;
}

}  // namespace rgsl
