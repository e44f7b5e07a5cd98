#include <rgsl/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace rgsl {

namespace {

void require_same_length(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("label vectors differ in length: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
}

int id_count(std::span<const int> ids) {
  int mx = -1;
  for (int v : ids) {
    if (v < 0) throw InvalidInput("negative cluster/class id");
    mx = std::max(mx, v);
  }
  return mx + 1;
}

// counts(p, t) = #samples with pred p and truth t.
Matrix contingency(std::span<const int> pred, std::span<const int> truth, int np, int nt) {
  Matrix counts = Matrix::Zero(np, nt);
  for (std::size_t i = 0; i < pred.size(); ++i) counts(pred[i], truth[i]) += 1.0;
  return counts;
}

double entropy(const Vector& counts, double n) {
  double h = 0.0;
  for (Index i = 0; i < counts.size(); ++i) {
    if (counts(i) > 0.0) {
      const double p = counts(i) / n;
      h -= p * std::log(p);
    }
  }
  return h;
}

}  // namespace

std::vector<Index> hungarian_min_cost(const Matrix& cost) {
  const Index n = cost.rows();
  if (cost.cols() != n) throw InvalidInput("Hungarian method needs a square cost matrix");
  // Potentials formulation with 1-based sentinels.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<Index> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (Index i = 1; i <= n; ++i) {
    p[0] = i;
    Index j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const Index i0 = p[j0];
      double delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (Index j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const Index j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<Index> assignment(static_cast<std::size_t>(n), 0);
  for (Index j = 1; j <= n; ++j) assignment[static_cast<std::size_t>(p[j] - 1)] = j - 1;
  return assignment;
}

std::vector<int> best_cluster_mapping(std::span<const int> pred, std::span<const int> truth) {
  require_same_length(pred, truth);
  const int np = id_count(pred);
  const int nt = id_count(truth);
  const int size = std::max(np, nt);
  Matrix cost = Matrix::Zero(size, size);
  cost.topLeftCorner(np, nt) = -contingency(pred, truth, np, nt);
  const auto assign = hungarian_min_cost(cost);
  std::vector<int> mapping(static_cast<std::size_t>(np), -1);
  for (int p = 0; p < np; ++p) {
    const auto t = assign[static_cast<std::size_t>(p)];
    if (t < nt) mapping[static_cast<std::size_t>(p)] = static_cast<int>(t);
  }
  return mapping;
}

double clustering_accuracy(std::span<const int> pred, std::span<const int> truth) {
  require_same_length(pred, truth);
  if (pred.empty()) return 0.0;
  const auto mapping = best_cluster_mapping(pred, truth);
  std::size_t hit = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    hit += mapping[static_cast<std::size_t>(pred[i])] == truth[i] ? 1 : 0;
  }
  return static_cast<double>(hit) / static_cast<double>(pred.size());
}

double nmi(std::span<const int> pred, std::span<const int> truth) {
  require_same_length(pred, truth);
  if (pred.empty()) return 0.0;
  const int np = id_count(pred);
  const int nt = id_count(truth);
  const double n = static_cast<double>(pred.size());
  const Matrix counts = contingency(pred, truth, np, nt);
  const Vector rows = counts.rowwise().sum();
  const Vector cols = counts.colwise().sum().transpose();
  const double hp = entropy(rows, n);
  const double ht = entropy(cols, n);
  if (hp == 0.0 || ht == 0.0) {
    // Both trivial: identical single-cluster partitions.
    return (hp == 0.0 && ht == 0.0) ? 1.0 : 0.0;
  }
  double mi = 0.0;
  for (int p = 0; p < np; ++p) {
    for (int t = 0; t < nt; ++t) {
      const double c = counts(p, t);
      if (c > 0.0) mi += (c / n) * std::log(c * n / (rows(p) * cols(t)));
    }
  }
  return std::clamp(mi / (0.5 * (hp + ht)), 0.0, 1.0);
}

double macro_f1(std::span<const int> pred, std::span<const int> truth) {
  require_same_length(pred, truth);
  if (pred.empty()) return 0.0;
  const auto mapping = best_cluster_mapping(pred, truth);
  const int nt = id_count(truth);
  std::vector<double> tp(static_cast<std::size_t>(nt), 0.0), predicted(tp), actual(tp);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const int mapped = mapping[static_cast<std::size_t>(pred[i])];
    actual[static_cast<std::size_t>(truth[i])] += 1.0;
    if (mapped >= 0) {
      predicted[static_cast<std::size_t>(mapped)] += 1.0;
      if (mapped == truth[i]) tp[static_cast<std::size_t>(mapped)] += 1.0;
    }
  }
  double sum = 0.0;
  for (int c = 0; c < nt; ++c) {
    const auto k = static_cast<std::size_t>(c);
    if (tp[k] == 0.0) continue;
    const double precision = tp[k] / predicted[k];
    const double recall = tp[k] / actual[k];
    sum += 2.0 * precision * recall / (precision + recall);
  }
  return sum / static_cast<double>(nt);
}

double classification_accuracy(std::span<const int> pred, std::span<const int> truth,
                               std::span<const std::uint8_t> mask) {
  require_same_length(pred, truth);
  if (mask.size() != pred.size()) throw InvalidInput("mask length differs from label length");
  std::size_t total = 0;
  std::size_t hit = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (!mask[i]) continue;
    ++total;
    hit += pred[i] == truth[i] ? 1 : 0;
  }
  if (total == 0) throw InvalidInput("classification accuracy over an empty mask");
  return static_cast<double>(hit) / static_cast<double>(total);
}

ClusteringScores score_clustering(std::span<const int> pred, std::span<const int> truth) {
  return {clustering_accuracy(pred, truth), nmi(pred, truth), macro_f1(pred, truth)};
}

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double var = 0.0;
  for (double v : values) var += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(var / n);
  return s;
}

}  // namespace rgsl
