#include <rgsl/experiment.hpp>

#include <rgsl/protocols.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rgsl {

namespace {

using Record = nlohmann::ordered_json;

constexpr DatasetPreset kPresets[] = {
    {"chameleon", 5, 5.0, 1.0, 0.01, 1e-3},
    {"squirrel", 2, 5.0, 100.0, 0.01, 1e-3},
    {"wisconsin", 1, 50.0, 100.0, 0.1, 1.0},
    {"cornell", 17, 0.001, 100.0, 0.01, 1e-3},
    {"texas", 4, 0.01, 0.001, 0.01, 1e-3},
    {"washington", 8, 0.01, 100.0, 0.01, 1e-3},
    {"roman-empire", 5, 0.001, 1.0, 0.01, 1e-3},
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

std::string format_mean_std(std::span<const double> values) {
  const Summary s = summarize(values);
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << 100.0 * s.mean << " +- " << 100.0 * s.std;
  return out.str();
}

Record learn_fields(const LearnConfig& c) {
  Record r;
  r["variant"] = std::string(to_string(c.variant));
  r["k"] = c.k;
  r["alpha"] = c.alpha;
  r["beta"] = c.beta;
  r["epsilon"] = c.epsilon;
  r["lr"] = c.lr;
  r["gradient_mode"] = std::string(to_string(c.gradient_mode));
  return r;
}

void write_lines(const std::filesystem::path& file, const std::vector<std::string>& lines) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  for (const auto& l : lines) out << l << '\n';
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << text;
}

template <typename Column>
void write_node_table(const std::filesystem::path& file, Index n,
                      const std::vector<std::string>& headers, Column&& value) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << "node";
  for (const auto& h : headers) out << '\t' << h;
  out << '\n';
  for (Index i = 0; i < n; ++i) {
    out << i;
    for (std::size_t c = 0; c < headers.size(); ++c) out << '\t' << value(c, i);
    out << '\n';
  }
}

}  // namespace

std::string_view to_string(Task t) {
  switch (t) {
    case Task::cluster: return "cluster";
    case Task::classify: return "classify";
    case Task::robustness: return "robustness";
    case Task::diagnose: return "diagnose";
  }
  return "unknown";
}

std::optional<DatasetPreset> find_preset(std::string_view dataset_name) {
  const std::string key = lower(dataset_name);
  for (const auto& p : kPresets) {
    if (key == p.name) return p;
  }
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (dataset.empty()) throw ConfigError("--dataset is required");
  try {
    learn.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
  switch (task) {
    case Task::cluster:
      if (!clusters) throw ConfigError("task cluster requires --c (number of clusters)");
      if (*clusters < 2) throw ConfigError("--c must be at least 2");
      if (spectral_runs < 1) throw ConfigError("--spectral-runs must be at least 1");
      break;
    case Task::classify:
    case Task::robustness:
      if (!(gamma > 0.0)) throw ConfigError("--gamma must be > 0");
      if (split_seeds.empty() && splits < 1) throw ConfigError("--splits must be at least 1");
      if (task == Task::robustness) {
        if (rates.empty()) throw ConfigError("--r needs at least one rate");
        for (double r : rates) {
          if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("random edge rates must lie in [0, 1]");
        }
        if (noise_seeds < 1) throw ConfigError("--seeds must be at least 1");
        if (variants.empty()) throw ConfigError("--variant needs at least one variant");
      }
      break;
    case Task::diagnose:
      break;
  }
}

std::vector<std::uint64_t> ExperimentConfig::effective_split_seeds() const {
  if (!split_seeds.empty()) return split_seeds;
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(std::max(splits, 0)));
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i;
  return seeds;
}

ClusterResult run_clustering(const Graph& g, const ExperimentConfig& cfg) {
  if (!cfg.clusters) throw ConfigError("clustering requires a cluster count");
  ClusterResult result;
  result.graph = learn(g, cfg.learn);
  if (g.has_labels()) {
    result.mask_homophily = support_homophily(result.graph.final_mask.to_matrix(), g.labels());
  }
  for (int r = 0; r < cfg.spectral_runs; ++r) {
    ClusterRun run;
    run.seed = cfg.spectral_seed + static_cast<std::uint64_t>(r);
    run.labels = spectral_clustering(result.graph.c, *cfg.clusters, run.seed).labels;
    if (g.has_labels()) run.scores = score_clustering(run.labels, g.labels());
    result.runs.push_back(std::move(run));
  }
  return result;
}

ClassifyRun classify_split(const Matrix& affinity, const Graph& g, std::uint64_t split_seed,
                           const ExperimentConfig& cfg) {
  const auto& labels = g.labels();
  const Index n = g.num_nodes();
  const SplitSpec split = dense_split(n, split_seed);
  const auto train = split.train_mask(n);
  const ClassifierOutput out =
      lgc_classify(affinity, labels, train, g.num_classes(), {cfg.gamma, cfg.lgc_self_loop});
  ClassifyRun run;
  run.split_seed = split_seed;
  run.test_accuracy = classification_accuracy(out.predictions, labels, split.test_mask(n));
  run.val_accuracy = classification_accuracy(out.predictions, labels, split.val_mask(n));
  run.predictions = out.predictions;
  return run;
}

ClassifyResult run_classification(const Graph& g, const ExperimentConfig& cfg) {
  ClassifyResult result;
  result.graph = learn(g, cfg.learn);
  for (std::uint64_t seed : cfg.effective_split_seeds()) {
    result.runs.push_back(classify_split(result.graph.c, g, seed, cfg));
  }
  return result;
}

std::vector<RobustnessRow> run_robustness(const Graph& g, const ExperimentConfig& cfg) {
  std::vector<RobustnessRow> rows;
  for (Variant v : cfg.variants) {
    LearnConfig lc = cfg.learn;
    lc.variant = v;
    for (double rate : cfg.rates) {
      for (int s = 0; s < cfg.noise_seeds; ++s) {
        const auto seed = static_cast<std::uint64_t>(s);
        const Graph noisy = perturb_edges(g, rate, seed);
        const LearnedGraph learned = learn(noisy, lc);
        rows.push_back({v, rate, seed, classify_split(learned.c, noisy, seed, cfg).test_accuracy});
      }
    }
  }
  return rows;
}

EvalReport run_task(const Dataset& ds, const ExperimentConfig& cfg) {
  cfg.validate();
  const Graph& g = ds.graph;
  const bool write = !cfg.out_dir.empty();
  if (write) std::filesystem::create_directories(cfg.out_dir);
  auto out_file = [&](const char* name) { return cfg.out_dir / name; };

  EvalReport report;
  std::ostringstream table;
  table << dataset_summary(ds) << '\n';
  table << "task: " << to_string(cfg.task) << '\n';

  auto base = [&] {
    Record r;
    r["dataset"] = ds.name;
    r["task"] = std::string(to_string(cfg.task));
    return r;
  };

  switch (cfg.task) {
    case Task::diagnose: {
      const DiagnosticsReport d = diagnose(g, cfg.outliers);
      const FilteredFeatures s = filtered_features(g, cfg.learn);
      const auto filtered_outliers = outlier_energy_ratio(g, s.values, cfg.outliers);
      Record r = base();
      r["nodes"] = g.num_nodes();
      r["edges"] = g.num_edges();
      r["features"] = g.num_features();
      r["classes"] = g.num_classes();
      r["homophily"] = d.homophily;
      r["sparsity"] = d.sparsity;
      r["dirichlet_energy"] = d.dirichlet_energy;
      r["dirichlet_form"] = "trace";
      r["outlier_ratio"] = d.outlier_ratio;
      r["outlier_count"] = d.outlier_count;
      r["k"] = cfg.learn.k;
      r["filtered_dirichlet_energy"] = dirichlet_energy(s.values, g);
      r["filtered_outlier_ratio"] = filtered_outliers.ratio;
      report.records.push_back(r.dump());
      table << std::setprecision(6) << "homophily " << d.homophily << "\nsparsity " << d.sparsity
            << "\ndirichlet energy Tr(X^T L X) " << d.dirichlet_energy
            << " (normalized form; the ordered-pair edge sum is twice this)\noutliers " << d.outlier_count << " ratio "
            << d.outlier_ratio << '\n';
      break;
    }
    case Task::cluster: {
      const ClusterResult res = run_clustering(g, cfg);
      std::vector<double> accs, nmis, f1s;
      for (const auto& run : res.runs) {
        Record r = base();
        r.update(learn_fields(cfg.learn));
        r["clusters"] = *cfg.clusters;
        r["seed"] = run.seed;
        r["acc"] = run.scores.acc;
        r["nmi"] = run.scores.nmi;
        r["f1"] = run.scores.f1;
        r["epochs"] = res.graph.epochs;
        r["final_loss"] = res.graph.loss_history.back();
        r["mask_homophily"] = res.mask_homophily;
        report.records.push_back(r.dump());
        accs.push_back(run.scores.acc);
        nmis.push_back(run.scores.nmi);
        f1s.push_back(run.scores.f1);
      }
      table << "runs " << res.runs.size() << "  ACC% " << format_mean_std(accs) << "  NMI% "
            << format_mean_std(nmis) << "  F1% " << format_mean_std(f1s) << '\n';
      table << "epochs " << res.graph.epochs << "  positive-mask homophily " << std::setprecision(4)
            << res.mask_homophily << '\n';
      if (write) {
        write_learned_graph(out_file("learned_graph.txt"), res.graph.c, cfg.dump_threshold);
        std::vector<std::string> headers;
        for (const auto& run : res.runs) headers.push_back("seed" + std::to_string(run.seed));
        write_node_table(out_file("cluster_labels.tsv"), g.num_nodes(), headers,
                         [&](std::size_t c, Index i) { return res.runs[c].labels[static_cast<std::size_t>(i)]; });
        report.files.push_back(out_file("learned_graph.txt"));
        report.files.push_back(out_file("cluster_labels.tsv"));
      }
      break;
    }
    case Task::classify: {
      const ClassifyResult res = run_classification(g, cfg);
      std::vector<double> accs;
      for (const auto& run : res.runs) {
        Record r = base();
        r.update(learn_fields(cfg.learn));
        r["gamma"] = cfg.gamma;
        r["split_seed"] = run.split_seed;
        r["test_accuracy"] = run.test_accuracy;
        r["val_accuracy"] = run.val_accuracy;
        r["epochs"] = res.graph.epochs;
        report.records.push_back(r.dump());
        accs.push_back(run.test_accuracy);
      }
      table << "splits " << res.runs.size() << "  test accuracy% " << format_mean_std(accs) << '\n';
      if (write) {
        write_learned_graph(out_file("learned_graph.txt"), res.graph.c, cfg.dump_threshold);
        std::vector<std::string> headers;
        for (const auto& run : res.runs) headers.push_back("split" + std::to_string(run.split_seed));
        write_node_table(out_file("predictions.tsv"), g.num_nodes(), headers,
                         [&](std::size_t c, Index i) { return res.runs[c].predictions[static_cast<std::size_t>(i)]; });
        report.files.push_back(out_file("learned_graph.txt"));
        report.files.push_back(out_file("predictions.tsv"));
      }
      break;
    }
    case Task::robustness: {
      const auto rows = run_robustness(g, cfg);
      std::vector<std::string> csv{"variant,r,seed,accuracy"};
      for (const auto& row : rows) {
        Record r = base();
        r.update(learn_fields(cfg.learn));
        r["variant"] = std::string(to_string(row.variant));
        r["r"] = row.rate;
        r["seed"] = row.seed;
        r["accuracy"] = row.accuracy;
        report.records.push_back(r.dump());
        std::ostringstream line;
        line << to_string(row.variant) << ',' << std::setprecision(17) << row.rate << ',' << row.seed
             << ',' << row.accuracy;
        csv.push_back(line.str());
      }
      for (Variant v : cfg.variants) {
        for (double rate : cfg.rates) {
          std::vector<double> accs;
          for (const auto& row : rows) {
            if (row.variant == v && row.rate == rate) accs.push_back(row.accuracy);
          }
          table << to_string(v) << "  r=" << rate << "  accuracy% " << format_mean_std(accs) << '\n';
        }
      }
      if (write) {
        write_lines(out_file("robustness.csv"), csv);
        report.files.push_back(out_file("robustness.csv"));
      }
      break;
    }
  }

  report.table = table.str();
  if (write) {
    write_lines(out_file("metrics.jsonl"), report.records);
    write_text(out_file("summary.txt"), report.table);
    report.files.push_back(out_file("metrics.jsonl"));
    report.files.push_back(out_file("summary.txt"));
  }
  return report;
}

EvalReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Dataset ds = load_dataset(resolve_dataset_path(cfg.dataset));
  return run_task(ds, cfg);
}

}  // namespace rgsl
