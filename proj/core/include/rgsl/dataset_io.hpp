#pragma once

#include <rgsl/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace rgsl {

/// File names inside a dataset directory.
inline constexpr const char* kEdgesFile = "edges.txt";
inline constexpr const char* kFeaturesFile = "features.csv";
inline constexpr const char* kLabelsFile = "labels.txt";

struct Dataset {
  std::string name;  ///< directory basename
  Graph graph;
};

// Stream readers. `source` is used in error messages only.
std::vector<Edge> read_edges(std::istream& in, const std::string& source = "edges");
Matrix read_features(std::istream& in, const std::string& source = "features");
std::vector<int> read_labels(std::istream& in, const std::string& source = "labels");

/// Loads edges.txt, features.csv and labels.txt (optional) from `dir`.
/// Throws ParseError naming file and line on malformed content, and
/// ParseError when edges.txt or features.csv are missing.
Dataset load_dataset(const std::filesystem::path& dir);

/// Resolves a dataset argument: an existing path is returned as is,
/// otherwise it is looked up under $RGSL_DATA_DIR.
std::filesystem::path resolve_dataset_path(const std::string& arg);

void save_dataset(const std::filesystem::path& dir, const Graph& g);

/// Writes the upper triangle (i <= j) of a symmetric matrix as `i j c_ij`
/// lines preceded by a line holding n. Entries with c_ij <= threshold are
/// omitted.
void write_learned_graph(std::ostream& out, const Matrix& c, double threshold = 1e-8);
void write_learned_graph(const std::filesystem::path& file, const Matrix& c,
                         double threshold = 1e-8);

/// Inverse of write_learned_graph; the lower triangle is mirrored.
Matrix read_learned_graph(std::istream& in, const std::string& source = "graph");

/// Table-1-style one-line summary: nodes, edges, features, classes,
/// homophily, sparsity.
std::string dataset_summary(const Dataset& ds);

}  // namespace rgsl
