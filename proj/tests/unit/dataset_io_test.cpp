#include <rgsl/dataset_io.hpp>

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rgsl {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("rgsl_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(ReadEdges, CommentsTabsAndSpaces) {
  std::istringstream in("# header\n0\t1\n1 2\n\n  2\t0  # trailing\n");
  std::vector<Edge> e = read_edges(in);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[2], Edge(2, 0));
}

TEST(ReadEdges, MalformedLineNamesLine) {
  std::istringstream in("0\t1\n1\tx\n");
  try {
    read_edges(in, "edges.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("edges.txt:2"), std::string::npos) << e.what();
  }
}

TEST(ReadFeatures, Basic) {
  std::istringstream in("1,0,2.5\n0,1,-1\n");
  Matrix x = read_features(in);
  ASSERT_EQ(x.rows(), 2);
  ASSERT_EQ(x.cols(), 3);
  EXPECT_EQ(x(0, 2), 2.5);
  EXPECT_EQ(x(1, 2), -1.0);
}

TEST(ReadFeatures, TruncatedRowNamesLine) {
  std::istringstream in("1,0,2\n0,1,1\n3,4\n");
  try {
    read_features(in, "features.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("features.csv:3"), std::string::npos) << e.what();
  }
}

TEST(ReadLabels, RejectsNonInteger) {
  std::istringstream in("0\n1.5\n");
  EXPECT_THROW(read_labels(in), ParseError);
}

TEST(LoadDataset, BundledToy) {
  Dataset ds = load_dataset(fs::path(RGSL_SOURCE_DIR) / "data" / "toy");
  EXPECT_EQ(ds.name, "toy");
  EXPECT_EQ(ds.graph.num_nodes(), 4);
  EXPECT_EQ(ds.graph.num_edges(), 4u);
  EXPECT_EQ(ds.graph.num_classes(), 2);
  const std::string summary = dataset_summary(ds);
  EXPECT_NE(summary.find("nodes=4"), std::string::npos) << summary;
}

TEST(LoadDataset, MissingFeatureFile) {
  fs::path dir = scratch_dir("missing");
  write_file(dir / kEdgesFile, "0\t1\n");
  EXPECT_THROW(load_dataset(dir), ParseError);
}

TEST(LoadDataset, LabelsOptional) {
  fs::path dir = scratch_dir("nolabels");
  write_file(dir / kEdgesFile, "0\t1\n");
  write_file(dir / kFeaturesFile, "1\n2\n");
  Dataset ds = load_dataset(dir);
  EXPECT_FALSE(ds.graph.has_labels());
}

TEST(LoadDataset, EdgeOutOfRange) {
  fs::path dir = scratch_dir("range");
  write_file(dir / kEdgesFile, "0\t5\n");
  write_file(dir / kFeaturesFile, "1\n2\n3\n");
  EXPECT_THROW(load_dataset(dir), InvalidInput);
}

TEST(SaveDataset, RoundTrip) {
  Graph g = fixture::heterophilic_graph({});
  fs::path dir = scratch_dir("roundtrip");
  save_dataset(dir, g);
  Graph h = load_dataset(dir).graph;
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(h.labels(), g.labels());
  EXPECT_EQ(h.features(), g.features());
}

TEST(ResolveDatasetPath, FallsBackToDataDir) {
  ::setenv("RGSL_DATA_DIR", (fs::path(RGSL_SOURCE_DIR) / "data").c_str(), 1);
  EXPECT_EQ(resolve_dataset_path("two_cliques"),
            fs::path(RGSL_SOURCE_DIR) / "data" / "two_cliques");
  ::unsetenv("RGSL_DATA_DIR");
}

TEST(LearnedGraph, RoundTripExact) {
  Matrix c = fixture::random_matrix(6, 6, 3).cwiseAbs();
  c = (c + c.transpose()).eval() / 3.0;
  c(1, 4) = c(4, 1) = 0.0;
  std::stringstream s;
  write_learned_graph(s, c);
  Matrix back = read_learned_graph(s);
  EXPECT_EQ(back, c);
}

TEST(LearnedGraph, ThresholdDropsSmallEntries) {
  Matrix c = Matrix::Zero(3, 3);
  c(0, 1) = c(1, 0) = 1e-9;
  c(1, 2) = c(2, 1) = 0.5;
  std::stringstream s;
  write_learned_graph(s, c);
  Matrix back = read_learned_graph(s);
  EXPECT_EQ(back(0, 1), 0.0);
  EXPECT_EQ(back(2, 1), 0.5);
}

}  // namespace
}  // namespace rgsl
