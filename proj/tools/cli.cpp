#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>

namespace rgsl::cli {

namespace {

struct Options {
  ExperimentConfig cfg;
  std::string gradient_mode = "paper";
  std::vector<std::string> variants{"rgsl"};
  std::optional<std::uint64_t> spectral_seed;
};

void build(CLI::App& app, Options& o) {
  auto& c = o.cfg;
  auto& l = c.learn;
  app.set_config("--config", "", "Flat key = value experiment file")->check(CLI::ExistingFile);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  for (auto task : {Task::cluster, Task::classify, Task::robustness, Task::diagnose}) {
    static const std::map<Task, std::string> help{
        {Task::cluster, "Learn a graph and run spectral clustering on it"},
        {Task::classify, "Learn a graph and run LGC on dense 60/20/20 splits"},
        {Task::robustness, "LGC accuracy under random edge replacement"},
        {Task::diagnose, "Dataset statistics: homophily, sparsity, Dirichlet energy"}};
    auto* sub = app.add_subcommand(std::string(to_string(task)), help.at(task));
    sub->fallthrough();
    sub->callback([&c, task] { c.task = task; });
  }

  app.add_option("--dataset", c.dataset, "Dataset directory or name under $RGSL_DATA_DIR")
      ->required();
  app.add_option("--out", c.out_dir, "Output directory")->capture_default_str();

  app.add_option("--k", l.k, "High-pass filter order")->check(CLI::NonNegativeNumber);
  app.add_option("--alpha", l.alpha, "alpha-norm parameter")->check(CLI::PositiveNumber);
  app.add_option("--beta", l.beta, "Regularizer weight")->check(CLI::NonNegativeNumber);
  app.add_option("--epsilon", l.epsilon, "Positive-mask threshold")->check(CLI::NonNegativeNumber);
  app.add_option("--lr", l.lr, "Adam learning rate")->check(CLI::PositiveNumber);
  app.add_option("--epochs", l.max_epochs, "Maximum optimizer epochs")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", l.tol, "Relative loss-change tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", l.seed, "Base seed");
  app.add_option("--gradient-mode", o.gradient_mode, "paper | exact")
      ->check(CLI::IsMember({"paper", "exact"}));
  app.add_option("--variant", o.variants,
                 "rgsl | rgsl-minus | frobenius | knn | fixed-a (comma list for robustness)")
      ->delimiter(',')
      ->check(CLI::IsMember({"rgsl", "rgsl-minus", "frobenius", "knn", "fixed-a"}));
  app.add_option("--mask-refresh", l.mask_refresh, "Epochs between positive-mask updates")
      ->check(CLI::PositiveNumber);
  app.add_option("--knn-k", l.knn_k, "K for the knn variant")->check(CLI::PositiveNumber);
  app.add_flag("--normalize-features", l.normalize_features, "Row-normalize features first");

  app.add_option("--c", c.clusters, "Number of clusters (cluster task)");
  app.add_option("--spectral-runs", c.spectral_runs, "Spectral clustering seeds per run")
      ->check(CLI::PositiveNumber);
  app.add_option("--spectral-seed", o.spectral_seed, "First spectral clustering seed");

  app.add_option("--gamma", c.gamma, "LGC trade-off")->check(CLI::PositiveNumber);
  app.add_flag("--lgc-self-loop", c.lgc_self_loop, "Add self-loops before the LGC Laplacian");
  app.add_option("--split-seed", c.split_seeds, "Dense split seed(s)")->delimiter(',');
  app.add_option("--splits", c.splits, "Number of dense splits when no seed is given")
      ->check(CLI::PositiveNumber);

  app.add_option("--r", c.rates, "Random edge rates")->delimiter(',')->check(CLI::Range(0.0, 1.0));
  app.add_option("--seeds", c.noise_seeds, "Noise seeds per rate")->check(CLI::PositiveNumber);

  app.add_option("--outlier-sigmas", c.outliers.high_degree_sigmas,
                 "High-degree outlier cutoff in standard deviations above the mean");
  app.add_option("--dump-threshold", c.dump_threshold, "Smallest learned weight written out");
}

bool given(const CLI::App& app, const std::string& name) {
  return app.get_option(name)->count() > 0;
}

void apply_preset(const CLI::App& app, ExperimentConfig& c) {
  const auto path = std::filesystem::path(c.dataset).lexically_normal();
  auto name = path.filename().string();
  if (name.empty()) name = path.parent_path().filename().string();
  const auto preset = find_preset(name);
  if (!preset) return;
  auto& l = c.learn;
  if (!given(app, "--k")) l.k = preset->k;
  if (!given(app, "--alpha")) l.alpha = preset->alpha;
  if (!given(app, "--beta")) l.beta = preset->beta;
  if (!given(app, "--lr")) l.lr = preset->lr;
  if (!given(app, "--epsilon")) l.epsilon = preset->epsilon;
}

}  // namespace

std::optional<ExperimentConfig> parse_arguments(const std::vector<std::string>& args,
                                                std::ostream& out) {
  CLI::App app{"Robust graph structure learning for heterophilic graphs", "rgsl"};
  Options o;
  o.cfg.out_dir = "rgsl-out";
  build(app, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  auto& c = o.cfg;
  try {
    c.learn.gradient_mode = parse_gradient_mode(o.gradient_mode);
    c.variants.clear();
    for (const auto& v : o.variants) c.variants.push_back(parse_variant(v));
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
  if (c.task != Task::robustness && c.variants.size() > 1) {
    throw ConfigError("--variant accepts a list only for the robustness task");
  }
  c.learn.variant = c.variants.front();
  if (c.task == Task::robustness && !given(app, "--variant")) {
    c.variants = {Variant::rgsl, Variant::rgsl_minus};
  }
  c.spectral_seed = o.spectral_seed.value_or(c.learn.seed);
  apply_preset(app, c);
  c.validate();
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<ExperimentConfig> cfg;
  try {
    cfg = parse_arguments(args, out);
    if (!cfg) return kSuccess;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  try {
    const EvalReport report = run_experiment(*cfg);
    out << report.table;
    for (const auto& f : report.files) out << "wrote " << f.string() << '\n';
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace rgsl::cli
