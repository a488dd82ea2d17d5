#ifndef ARBO_GRAPH_HPP
#define ARBO_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arbo {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using PartId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph in compressed adjacency form. Neighbor lists are
// sorted ascending; edges are numbered by their position in the
// lexicographically sorted list of (min, max) endpoint pairs. Immutable once
// built.
class Graph {
 public:
  Graph() = default;

  // Throws SelfLoop, DuplicateEdge (either orientation) or VertexOutOfRange.
  static Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

  // Attaches one part label per vertex. Does not check k-partiteness; use
  // validate_kpartite for that.
  Graph with_part_labels(std::vector<PartId> labels) const;
  Graph without_part_labels() const;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {slot_edge_.data() + offsets_[v], slot_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  // Canonical edge list: u < v, sorted, indexed by EdgeId.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  bool has_part_labels() const noexcept { return labeled_; }
  const std::vector<PartId>& part_labels() const noexcept { return labels_; }
  PartId part_of(Vertex v) const { return labels_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_ && a.labeled_ == b.labeled_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> slot_edge_;
  std::vector<Edge> edges_;
  std::vector<PartId> labels_;
  bool labeled_ = false;
};

struct OrderingResult {
  std::vector<Vertex> order;         // vertices in removal order
  std::vector<std::uint32_t> position;  // inverse of order
  std::uint32_t degeneracy = 0;
};

// Repeatedly removes a vertex of minimum residual degree (bucket queue, linear
// time). Each vertex has at most `degeneracy` neighbors later in `order`.
OrderingResult degeneracy_ordering(const Graph& g);

// Non-increasing degree, ties by vertex id.
std::vector<Vertex> degree_order(const Graph& g);

struct ArboricityBounds {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
};

// lower = max(1 if m > 0, ceil(m / (n-1))): a forest has at most n-1 edges.
// upper = min(max degree, degeneracy).
ArboricityBounds arboricity_bounds(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the parent graph
};

// Vertices are relabeled in ascending order of their original ids. Part
// labels, if present, are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Throws MissingLabels if g carries no part labels.
bool validate_kpartite(const Graph& g, std::uint32_t k);

}  // namespace arbo

#endif  // ARBO_GRAPH_HPP
