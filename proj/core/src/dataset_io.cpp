#include <rgsl/dataset_io.hpp>

#include <rgsl/diagnostics.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rgsl {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Strips a trailing '#' comment and surrounding whitespace.
std::string_view content(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  tok = trim(tok);
  if (tok.empty()) return false;
  if constexpr (std::is_floating_point_v<T>) {
    // from_chars for double rejects a leading '+'; strtod handles it and
    // the inf/nan spellings uniformly.
    std::string buf(tok);
    char* end = nullptr;
    out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
  } else {
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  }
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  return in;
}

}  // namespace

std::vector<Edge> read_edges(std::istream& in, const std::string& source) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = content(line);
    if (body.empty()) continue;
    const auto sep = body.find_first_of(" \t");
    if (sep == std::string_view::npos) fail(source, lineno, "expected two node ids");
    Index u = 0;
    Index v = 0;
    if (!parse_number(body.substr(0, sep), u) || !parse_number(body.substr(sep + 1), v)) {
      fail(source, lineno, "expected two integer node ids, got '" + std::string(body) + "'");
    }
    if (u < 0 || v < 0) fail(source, lineno, "negative node id");
    edges.emplace_back(u, v);
  }
  return edges;
}

Matrix read_features(std::istream& in, const std::string& source) {
  std::vector<double> values;
  Index cols = -1;
  Index rows = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    Index count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
      double x = 0.0;
      if (!parse_number(tok, x)) {
        fail(source, lineno, "bad numeric field " + std::to_string(count + 1) + " '" +
                                 std::string(trim(tok)) + "'");
      }
      values.push_back(x);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols < 0) {
      cols = count;
    } else if (count != cols) {
      fail(source, lineno,
           "row has " + std::to_string(count) + " fields, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(source + ": no feature rows");
  Matrix x(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) x(r, c) = values[static_cast<std::size_t>(r * cols + c)];
  }
  return x;
}

std::vector<int> read_labels(std::istream& in, const std::string& source) {
  std::vector<int> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = content(line);
    if (body.empty()) continue;
    int y = 0;
    if (!parse_number(body, y) || y < 0) {
      fail(source, lineno, "expected a nonnegative class id, got '" + std::string(body) + "'");
    }
    labels.push_back(y);
  }
  return labels;
}

Dataset load_dataset(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("dataset directory not found: " + dir.string());
  const auto edges_path = dir / kEdgesFile;
  const auto features_path = dir / kFeaturesFile;
  const auto labels_path = dir / kLabelsFile;

  auto edges_in = open_input(edges_path);
  auto edges = read_edges(edges_in, edges_path.string());
  auto features_in = open_input(features_path);
  Matrix features = read_features(features_in, features_path.string());
  std::optional<std::vector<int>> labels;
  if (fs::exists(labels_path)) {
    auto labels_in = open_input(labels_path);
    labels = read_labels(labels_in, labels_path.string());
  }

  Dataset ds;
  ds.name = fs::absolute(dir).lexically_normal().filename().string();
  if (ds.name.empty()) ds.name = fs::absolute(dir).lexically_normal().parent_path().filename().string();
  ds.graph = build_graph(edges, std::move(features), std::move(labels));
  return ds;
}

std::filesystem::path resolve_dataset_path(const std::string& arg) {
  namespace fs = std::filesystem;
  const fs::path direct(arg);
  if (fs::is_directory(direct)) return direct;
  if (const char* root = std::getenv("RGSL_DATA_DIR"); root != nullptr && *root != '\0') {
    const fs::path under = fs::path(root) / arg;
    if (fs::is_directory(under)) return under;
  }
  return direct;
}

void save_dataset(const std::filesystem::path& dir, const Graph& g) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / kEdgesFile);
    for (const auto& [i, j] : g.edges()) out << i << '\t' << j << '\n';
  }
  {
    std::ofstream out(dir / kFeaturesFile);
    out << std::setprecision(17);
    const Matrix& x = g.features();
    for (Index r = 0; r < x.rows(); ++r) {
      for (Index c = 0; c < x.cols(); ++c) {
        if (c > 0) out << ',';
        out << x(r, c);
      }
      out << '\n';
    }
  }
  if (g.has_labels()) {
    std::ofstream out(dir / kLabelsFile);
    for (int y : g.labels()) out << y << '\n';
  }
}

void write_learned_graph(std::ostream& out, const Matrix& c, double threshold) {
  const Index n = c.rows();
  out << n << '\n';
  out << std::setprecision(17);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      if (c(i, j) > threshold) out << i << ' ' << j << ' ' << c(i, j) << '\n';
    }
  }
}

void write_learned_graph(const std::filesystem::path& file, const Matrix& c, double threshold) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  write_learned_graph(out, c, threshold);
}

Matrix read_learned_graph(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  Index n = -1;
  while (n < 0 && std::getline(in, line)) {
    ++lineno;
    const auto body = content(line);
    if (body.empty()) continue;
    if (!parse_number(body, n) || n < 0) fail(source, lineno, "expected node count");
  }
  if (n < 0) throw ParseError(source + ": missing node count header");
  Matrix c = Matrix::Zero(n, n);
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = content(line);
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    Index i = 0;
    Index j = 0;
    double w = 0.0;
    if (!(fields >> i >> j >> w) || i < 0 || j < 0 || i >= n || j >= n) {
      fail(source, lineno, "expected 'i j weight' with ids below " + std::to_string(n));
    }
    c(i, j) = w;
    c(j, i) = w;
  }
  return c;
}

std::string dataset_summary(const Dataset& ds) {
  const Graph& g = ds.graph;
  std::ostringstream s;
  s << std::fixed << std::setprecision(4);
  s << "dataset=" << ds.name << " nodes=" << g.num_nodes() << " edges=" << g.num_edges()
    << " features=" << g.num_features() << " classes=" << g.num_classes();
  if (g.has_labels()) s << " homophily=" << homophily(g);
  s << " sparsity=" << sparsity(g) * 100.0 << "%";
  return s.str();
}

}  // namespace rgsl
