#include "arbo/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "arbo/error.hpp"
#include "arbo/primes.hpp"

namespace arbo {

namespace {

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::kNotPrime, "q=" + std::to_string(q));
}

// ceil with a little slack so exact powers (10^4^0.75) do not round up.
std::size_t ceil_size(double x) { return static_cast<std::size_t>(std::ceil(x - 1e-9)); }

}  // namespace

Graph polarity_graph(std::uint32_t q) {
  require_prime(q);
  std::vector<std::array<std::uint32_t, 3>> points;
  points.push_back({0, 0, 1});
  for (std::uint32_t b = 0; b < q; ++b) points.push_back({0, 1, b});
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) points.push_back({1, a, b});

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& x = points[i];
      const auto& y = points[j];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) edges.push_back({Vertex(i), Vertex(j)});
    }
  }
  return Graph::from_edge_list(edges, points.size());
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = n < 2 ? 0 : std::uint64_t(n) * (n - 1) / 2;
  if (m > total) {
    throw Error(ErrorCode::kTooManyEdges, "m=" + std::to_string(m) + " exceeds C(n,2)=" + std::to_string(total));
  }
  // Dense requests sample the complement instead.
  const bool complement = m > total / 2;
  const std::uint64_t draws = complement ? total - m : m;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n == 0 ? 0 : n - 1);
  std::unordered_set<std::uint64_t> chosen;
  while (chosen.size() < draws) {
    const std::uint64_t u = pick(rng), v = pick(rng);
    if (u == v) continue;
    chosen.insert(std::min(u, v) * n + std::max(u, v));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  if (complement) {
    for (std::uint64_t u = 0; u < n; ++u)
      for (std::uint64_t v = u + 1; v < n; ++v)
        if (!chosen.contains(u * n + v)) edges.push_back({Vertex(u), Vertex(v)});
  } else {
    for (std::uint64_t key : chosen) edges.push_back({Vertex(key / n), Vertex(key % n)});
  }
  return Graph::from_edge_list(edges, n);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({Vertex(u), Vertex(v)});
  return Graph::from_edge_list(edges, n);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.push_back({Vertex(u), Vertex(a + v)});
  std::vector<PartId> labels(a + b, 1);
  std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(a), 0);
  return Graph::from_edge_list(edges, a + b).with_part_labels(std::move(labels));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({Vertex(v), Vertex((v + 1) % n)});
  return Graph::from_edge_list(edges, n);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({Vertex(v), Vertex(v + 1)});
  return Graph::from_edge_list(edges, n);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, Vertex(v)});
  return Graph::from_edge_list(edges, leaves + 1);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, Vertex((i + 1) % 5)});
    edges.push_back({i, Vertex(i + 5)});
    edges.push_back({Vertex(i + 5), Vertex(5 + (i + 2) % 5)});
  }
  return Graph::from_edge_list(edges, 10);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  Graph g = Graph::from_edge_list(edges, a.num_vertices() + b.num_vertices());
  if (a.has_part_labels() && b.has_part_labels()) {
    std::vector<PartId> labels = a.part_labels();
    labels.insert(labels.end(), b.part_labels().begin(), b.part_labels().end());
    g = g.with_part_labels(std::move(labels));
  }
  return g;
}

Graph color_code_with(const Graph& g, std::vector<PartId> labels) {
  if (labels.size() != g.num_vertices()) {
    throw Error(ErrorCode::kBadArgument, "one label per vertex required");
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (labels[e.u] != labels[e.v]) kept.push_back(e);
  }
  return Graph::from_edge_list(kept, g.num_vertices()).with_part_labels(std::move(labels));
}

Graph color_code(const Graph& g, std::uint32_t k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::kBadArgument, "color coding needs k>=2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<PartId> color(0, k - 1);
  std::vector<PartId> labels(g.num_vertices());
  for (auto& l : labels) l = color(rng);
  return color_code_with(g, std::move(labels));
}

Graph random_kpartite(std::uint32_t k, std::size_t part_size, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  const std::size_t n = static_cast<std::size_t>(k) * part_size;
  std::vector<PartId> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<PartId>(v / part_size);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (labels[u] != labels[v] && keep(rng)) edges.push_back({Vertex(u), Vertex(v)});
  return Graph::from_edge_list(edges, n).with_part_labels(std::move(labels));
}

CycleOrigin ReductionInstance::origin(const FourCycleRecord& cycle) const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (is_matching_edge(cycle.v[i], cycle.v[(i + 1) % 4])) return CycleOrigin::kTriangle;
  }
  return CycleOrigin::kFourCycle;
}

bool ReductionInstance::is_matching_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (c_copy.empty() || v < c_copy.front()) return false;
  const std::size_t idx = v - c_copy.front();
  return idx < c_vertices.size() && c_vertices[idx] == u;
}

ReductionInstance triangle_to_4cycle_transform(const Graph& g) {
  if (!g.has_part_labels() || !validate_kpartite(g, 3)) {
    throw Error(ErrorCode::kNotTripartite, "input must carry a valid 3-part labeling");
  }
  const std::size_t n = g.num_vertices();
  ReductionInstance out;
  std::vector<Vertex> copy_of(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.part_of(Vertex(v)) == 2) {
      copy_of[v] = static_cast<Vertex>(n + out.c_vertices.size());
      out.c_vertices.push_back(Vertex(v));
      out.c_copy.push_back(copy_of[v]);
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const PartId lu = g.part_of(e.u), lv = g.part_of(e.v);
    if (lu + lv == 2) {  // A-C
      const Vertex a = lu == 0 ? e.u : e.v;
      const Vertex c = lu == 0 ? e.v : e.u;
      edges.push_back({a, copy_of[c]});
    } else {
      edges.push_back(e);
    }
  }
  for (std::size_t i = 0; i < out.c_vertices.size(); ++i) edges.push_back({out.c_vertices[i], out.c_copy[i]});

  std::vector<PartId> labels = g.part_labels();
  labels.resize(n + out.c_vertices.size(), 3);
  out.graph = Graph::from_edge_list(edges, labels.size()).with_part_labels(std::move(labels));
  out.source_triangle_count = count_triangles(g);
  out.source_4cycle_count = count_4cycles(g);
  return out;
}

Graph pad_with_c4free(const Graph& g, std::size_t copies, std::uint32_t q) {
  require_prime(q);
  if (copies == 0) return g;
  const Graph block = polarity_graph(q);
  Graph out = g.without_part_labels();
  for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, block);
  return out;
}

SparseTriangleShape sparse_triangle_shape(double n_param, double sigma) {
  if (!(sigma > 0.0 && sigma < 0.5)) {
    throw Error(ErrorCode::kBadSigma, "sigma=" + std::to_string(sigma) + " outside (0, 0.5)");
  }
  SparseTriangleShape shape;
  shape.vertices = ceil_size(std::pow(n_param, 1.0 - sigma));
  shape.degree_cap = ceil_size(std::pow(n_param, 0.5 - sigma));
  if (shape.vertices < 3 || shape.degree_cap < 1) {
    throw Error(ErrorCode::kBadArgument, "n=" + std::to_string(n_param) + " too small for sigma");
  }
  return shape;
}

Graph sparse_triangle_instance(double n_param, double sigma, std::uint64_t seed) {
  const SparseTriangleShape shape = sparse_triangle_shape(n_param, sigma);
  const std::size_t n = shape.vertices;
  std::array<std::vector<Vertex>, 3> parts;
  std::vector<PartId> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = static_cast<PartId>(v * 3 / n);
    parts[labels[v]].push_back(Vertex(v));
  }

  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
  for (std::size_t round = 0; round < 3 * shape.degree_cap; ++round) {
    const auto [x, y] = pairs[round % 3];
    std::vector<Vertex> partner = parts[y];
    std::shuffle(partner.begin(), partner.end(), rng);
    for (std::size_t i = 0; i < std::min(parts[x].size(), partner.size()); ++i) {
      const Vertex u = parts[x][i], v = partner[i];
      if (degree[u] >= shape.degree_cap || degree[v] >= shape.degree_cap) continue;
      if (edges.insert({std::min(u, v), std::max(u, v)}).second) {
        ++degree[u];
        ++degree[v];
      }
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edge_list(list, n).with_part_labels(std::move(labels));
}

WeightedKPartiteGraph random_weighted_kpartite(std::uint32_t k, std::size_t part_size, double density,
                                               std::int64_t weight_bound, bool plant, std::uint64_t seed) {
  if (k < 2 || part_size == 0) throw Error(ErrorCode::kBadArgument, "need k>=2 and nonempty parts");
  std::mt19937_64 rng(seed);
  Graph base = random_kpartite(k, part_size, density, rng());

  std::vector<Vertex> planted;
  if (plant) {
    std::uniform_int_distribution<std::size_t> member(0, part_size - 1);
    for (std::uint32_t i = 0; i < k; ++i) planted.push_back(Vertex(i * part_size + member(rng)));
    std::vector<Edge> edges = base.edges();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (!base.has_edge(planted[a], planted[b])) edges.push_back({planted[a], planted[b]});
    base = Graph::from_edge_list(edges, base.num_vertices()).with_part_labels(base.part_labels());
  }

  std::uniform_int_distribution<std::int64_t> weight(-weight_bound, weight_bound);
  std::vector<std::int64_t> weights(base.num_edges());
  for (auto& w : weights) w = weight(rng);

  if (plant) {
    std::vector<EdgeId> ids;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) ids.push_back(*base.edge_id(planted[a], planted[b]));
    while (true) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < ids.size(); ++i) sum += (weights[ids[i]] = weight(rng));
      if (std::abs(sum) <= weight_bound) {
        weights[ids.back()] = -sum;
        break;
      }
    }
  }
  return WeightedKPartiteGraph::make(std::move(base), k, std::move(weights), weight_bound);
}

}  // namespace arbo
