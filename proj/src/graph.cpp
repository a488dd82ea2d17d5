#include "arbo/graph.hpp"

#include <algorithm>
#include <string>

#include "arbo/error.hpp"

namespace arbo {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(std::span<const Edge> edges, std::size_t n) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + edge_text(e.u, e.v) + " with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(e.u));
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(canon.begin(), canon.end());
  if (auto dup = std::adjacent_find(canon.begin(), canon.end()); dup != canon.end()) {
    throw Error(ErrorCode::kDuplicateEdge, edge_text(dup->u, dup->v));
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.adjacency_.resize(2 * canon.size());
  g.slot_edge_.resize(2 * canon.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order makes each neighbor list come out ascending:
  // every (u, v) with u < v precedes every (v, w).
  for (EdgeId id = 0; id < canon.size(); ++id) {
    const auto [u, v] = canon[id];
    g.adjacency_[fill[u]] = v;
    g.slot_edge_[fill[u]++] = id;
    g.adjacency_[fill[v]] = u;
    g.slot_edge_[fill[v]++] = id;
  }
  g.edges_ = std::move(canon);
  return g;
}

Graph Graph::with_part_labels(std::vector<PartId> labels) const {
  if (labels.size() != num_vertices()) {
    throw Error(ErrorCode::kBadArgument, "expected " + std::to_string(num_vertices()) +
                                             " part labels, got " + std::to_string(labels.size()));
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  g.labeled_ = true;
  return g;
}

Graph Graph::without_part_labels() const {
  Graph g = *this;
  g.labels_.clear();
  g.labeled_ = false;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return slot_edge_[offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

OrderingResult degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  OrderingResult result;
  result.order.reserve(n);
  result.position.assign(n, 0);
  if (n == 0) return result;

  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<std::uint32_t> residual(n);
  std::vector<Vertex> head(g.max_degree() + 1, kNone);
  std::vector<Vertex> next(n, kNone), prev(n, kNone);
  std::vector<bool> removed(n, false);

  auto unlink = [&](Vertex v) {
    if (prev[v] != kNone) next[prev[v]] = next[v];
    else head[residual[v]] = next[v];
    if (next[v] != kNone) prev[next[v]] = prev[v];
  };
  auto push = [&](Vertex v) {
    prev[v] = kNone;
    next[v] = head[residual[v]];
    if (next[v] != kNone) prev[next[v]] = v;
    head[residual[v]] = v;
  };

  // Descending insertion leaves the smallest id at each bucket head.
  for (std::size_t i = n; i-- > 0;) {
    const auto v = static_cast<Vertex>(i);
    residual[v] = static_cast<std::uint32_t>(g.degree(v));
    push(v);
  }

  std::size_t cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (head[cur] == kNone) ++cur;
    const Vertex v = head[cur];
    unlink(v);
    removed[v] = true;
    result.position[v] = static_cast<std::uint32_t>(result.order.size());
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, residual[v]);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      unlink(u);
      --residual[u];
      push(u);
    }
    if (cur > 0) --cur;
  }
  return result;
}

std::vector<Vertex> degree_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

ArboricityBounds arboricity_bounds(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  ArboricityBounds b;
  if (m == 0) return b;
  b.lower = static_cast<std::uint32_t>(std::max<std::size_t>(1, (m + (n - 2)) / (n - 1)));
  b.upper = std::min(static_cast<std::uint32_t>(g.max_degree()), degeneracy_ordering(g).degeneracy);
  return b;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.original.assign(vertices.begin(), vertices.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());

  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    const Vertex v = out.original[i];
    if (v >= g.num_vertices()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " with n=" + std::to_string(g.num_vertices()));
    }
    local[v] = static_cast<Vertex>(i);
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i])) {
      if (w > out.original[i] && local[w] != kAbsent) edges.push_back({static_cast<Vertex>(i), local[w]});
    }
  }
  out.graph = Graph::from_edge_list(edges, out.original.size());
  if (g.has_part_labels()) {
    std::vector<PartId> labels;
    labels.reserve(out.original.size());
    for (Vertex v : out.original) labels.push_back(g.part_of(v));
    out.graph = out.graph.with_part_labels(std::move(labels));
  }
  return out;
}

bool validate_kpartite(const Graph& g, std::uint32_t k) {
  if (!g.has_part_labels()) throw Error(ErrorCode::kMissingLabels, "graph has no part labels");
  for (PartId label : g.part_labels()) {
    if (label >= k) return false;
  }
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return g.part_of(e.u) == g.part_of(e.v); });
}

}  // namespace arbo
