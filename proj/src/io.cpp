#include "arbo/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "arbo/error.hpp"

namespace arbo::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

// Header fields "n=<N>" and "k=<K>"; returns false if the comment is not a header.
bool parse_header(std::string_view body, EdgeListFile& file, std::size_t line) {
  const auto toks = tokens(body);
  if (toks.empty() || !toks.front().starts_with("n=")) return false;
  for (auto tok : toks) {
    if (tok.starts_with("n=")) {
      std::size_t n = 0;
      if (!parse_number(tok.substr(2), n)) fail(line, "bad header field '" + std::string(tok) + "'");
      file.n = n;
    } else if (tok.starts_with("k=")) {
      std::uint32_t k = 0;
      if (!parse_number(tok.substr(2), k)) fail(line, "bad header field '" + std::string(tok) + "'");
      file.k = k;
    } else {
      fail(line, "unknown header field '" + std::string(tok) + "'");
    }
  }
  return true;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return in;
}

std::vector<PartId> labels_for(const std::string& path, const std::optional<std::string>& labels_path) {
  const std::string lp = labels_path.value_or(default_labels_path(path));
  if (!labels_path && !std::filesystem::exists(lp)) return {};
  auto in = open(lp);
  return parse_labels(in);
}

}  // namespace

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile file;
  std::string raw;
  std::size_t line = 0;
  int columns = 0;
  bool header_allowed = true;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    text.remove_prefix(first);
    if (text.front() == '#') {
      const std::string_view body = text.substr(1);
      if (!(header_allowed && parse_header(body, file, line))) {
        const auto b = body.find_first_not_of(' ');
        file.metadata.emplace_back(b == std::string_view::npos ? std::string_view{} : body.substr(b));
      }
      continue;
    }
    header_allowed = false;
    const auto toks = tokens(text);
    if (toks.size() != 2 && toks.size() != 3) fail(line, "expected 'u v' or 'u v w'");
    if (columns == 0) columns = static_cast<int>(toks.size());
    if (static_cast<int>(toks.size()) != columns) fail(line, "mixed weighted and unweighted lines");
    Edge e{};
    if (!parse_number(toks[0], e.u) || !parse_number(toks[1], e.v)) fail(line, "vertex ids must be non-negative integers");
    file.edges.push_back(e);
    if (columns == 3) {
      std::int64_t w = 0;
      if (!parse_number(toks[2], w)) fail(line, "weight must be an integer");
      file.weights.push_back(w);
    }
  }
  file.weighted = columns == 3;
  return file;
}

std::vector<PartId> parse_labels(std::istream& in) {
  std::vector<PartId> labels;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokens(raw);
    if (toks.empty() || toks.front().starts_with("#")) continue;
    PartId l = 0;
    if (toks.size() != 1 || !parse_number(toks[0], l)) fail(line, "expected one non-negative label");
    labels.push_back(l);
  }
  return labels;
}

std::string default_labels_path(const std::string& edges_path) { return edges_path + ".labels"; }

Graph load_graph(const std::string& path, const std::optional<std::string>& labels_path) {
  auto in = open(path);
  const EdgeListFile file = parse_edge_list(in);
  std::size_t n = file.n.value_or(0);
  if (!file.n) {
    for (const Edge& e : file.edges) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  }
  std::vector<PartId> labels = labels_for(path, labels_path);
  if (!file.n && !labels.empty()) n = std::max(n, labels.size());
  Graph g = Graph::from_edge_list(file.edges, n);
  if (!labels.empty() || labels_path) g = g.with_part_labels(std::move(labels));
  return g;
}

WeightedKPartiteGraph load_weighted(const std::string& path, const std::optional<std::string>& labels_path,
                                    std::optional<std::uint32_t> k, std::optional<std::int64_t> weight_bound) {
  auto in = open(path);
  const EdgeListFile file = parse_edge_list(in);
  if (!file.weighted && !file.edges.empty()) {
    throw Error(ErrorCode::kParse, "'" + path + "' has no weight column");
  }
  std::vector<PartId> labels = labels_for(path, labels_path);
  if (labels.empty()) throw Error(ErrorCode::kMissingLabels, "no part labels for '" + path + "'");
  const std::size_t n = file.n.value_or(labels.size());
  Graph g = Graph::from_edge_list(file.edges, n).with_part_labels(labels);

  std::vector<std::int64_t> weights(g.num_edges());
  std::int64_t widest = 0;
  for (std::size_t i = 0; i < file.edges.size(); ++i) {
    weights[*g.edge_id(file.edges[i].u, file.edges[i].v)] = file.weights[i];
    widest = std::max(widest, file.weights[i] < 0 ? -file.weights[i] : file.weights[i]);
  }
  std::uint32_t parts = k.value_or(file.k.value_or(0));
  if (parts == 0) parts = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  return WeightedKPartiteGraph::make(std::move(g), parts, std::move(weights), weight_bound.value_or(widest));
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& metadata,
                     const std::vector<std::int64_t>* weights) {
  out << "# n=" << g.num_vertices();
  if (g.has_part_labels()) {
    const auto& l = g.part_labels();
    out << " k=" << (l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1);
  }
  out << '\n';
  for (const auto& line : metadata) out << "# " << line << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v;
    if (weights) out << ' ' << (*weights)[e];
    out << '\n';
  }
}

void write_labels(std::ostream& out, const Graph& g) {
  for (PartId l : g.part_labels()) out << l << '\n';
}

std::string format_record(const TriangleRecord& r) {
  return "T " + std::to_string(r.v[0]) + ' ' + std::to_string(r.v[1]) + ' ' + std::to_string(r.v[2]);
}

std::string format_record(const FourCycleRecord& r) {
  std::string s = "C4";
  for (Vertex v : r.v) s += ' ' + std::to_string(v);
  return s;
}

std::string format_record(const CliqueRecord& r) {
  std::string s = "K" + std::to_string(r.v.size());
  for (Vertex v : r.v) s += ' ' + std::to_string(v);
  return s;
}

}  // namespace arbo::io
