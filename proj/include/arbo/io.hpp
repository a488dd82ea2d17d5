#ifndef ARBO_IO_HPP
#define ARBO_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arbo/graph.hpp"
#include "arbo/listing.hpp"
#include "arbo/zeroclique.hpp"

namespace arbo::io {

// Text edge list: one "u v" (or weighted "u v w") per line, 0-indexed
// decimal. An optional header "# n=<N> k=<K>" fixes the vertex and part
// counts; any other line starting with '#' is metadata. Part labels live in
// a sibling file, one label per line.
struct EdgeListFile {
  std::optional<std::size_t> n;
  std::optional<std::uint32_t> k;
  std::vector<Edge> edges;
  bool weighted = false;
  std::vector<std::int64_t> weights;  // aligned with edges when weighted
  std::vector<std::string> metadata;  // comment text after '#'
};

// Throws Error(kParse) naming the offending line.
EdgeListFile parse_edge_list(std::istream& in);
std::vector<PartId> parse_labels(std::istream& in);

std::string default_labels_path(const std::string& edges_path);

// Builds the graph; when no header gives n, n is one past the largest id.
// Labels are read from labels_path, or from the default sibling if present.
Graph load_graph(const std::string& path, const std::optional<std::string>& labels_path = std::nullopt);

// Weighted k-partite input; k defaults to the header value, else to one past
// the largest label. weight_bound defaults to the largest |w|.
WeightedKPartiteGraph load_weighted(const std::string& path, const std::optional<std::string>& labels_path,
                                    std::optional<std::uint32_t> k = std::nullopt,
                                    std::optional<std::int64_t> weight_bound = std::nullopt);

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& metadata,
                     const std::vector<std::int64_t>* weights = nullptr);
void write_labels(std::ostream& out, const Graph& g);

// Record lines: "T a b c", "C4 a b c d", "K<k> v1 ... vk".
std::string format_record(const TriangleRecord& r);
std::string format_record(const FourCycleRecord& r);
std::string format_record(const CliqueRecord& r);

}  // namespace arbo::io

#endif  // ARBO_IO_HPP
