#ifndef ARBO_TESTS_SUPPORT_HPP
#define ARBO_TESTS_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "arbo/generators.hpp"
#include "arbo/graph.hpp"
#include "arbo/listing.hpp"

namespace arbo::test {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edge_list(edges, n);
}

template <typename Record, typename Lister>
std::pair<std::set<Record>, EnumerationStats> collect(Lister&& list) {
  std::set<Record> out;
  const EnumerationStats st = list([&](const Record& r) {
    out.insert(r);
    return Flow::kContinue;
  });
  return {out, st};
}

inline std::pair<std::set<TriangleRecord>, EnumerationStats> triangles_of(const Graph& g) {
  return collect<TriangleRecord>([&](auto sink) { return list_triangles(g, sink); });
}

inline std::pair<std::set<FourCycleRecord>, EnumerationStats> four_cycles_of(const Graph& g) {
  return collect<FourCycleRecord>([&](auto sink) { return list_4cycles(g, sink); });
}

inline std::pair<std::set<CliqueRecord>, EnumerationStats> cliques_of(const Graph& g, std::uint32_t k) {
  return collect<CliqueRecord>([&](auto sink) { return list_kcliques(g, k, sink); });
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Seeded mix of random G(n, m), polarity graphs, k-partite graphs and gadget
// outputs, all with n <= 64.
inline std::vector<Graph> mixed_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const std::uint64_t s = seed * 1000 + i;
    switch (i % 5) {
      case 0: {
        const std::size_t n = 8 + (s % 40);
        const std::size_t m = std::min<std::size_t>(n * (n - 1) / 2, n * (1 + s % 6));
        out.push_back(random_gnm(n, m, s));
        break;
      }
      case 1: out.push_back(polarity_graph(std::vector<std::uint32_t>{2, 3, 5, 7}[s % 4])); break;
      case 2: out.push_back(random_kpartite(2 + s % 3, 4 + s % 10, 0.3 + 0.1 * double(s % 5), s)); break;
      case 3: out.push_back(triangle_to_4cycle_transform(random_kpartite(3, 4 + s % 8, 0.4, s)).graph); break;
      case 4: out.push_back(random_gnm(64, 64 * (2 + s % 4), s)); break;
    }
  }
  return out;
}

}  // namespace arbo::test

#endif  // ARBO_TESTS_SUPPORT_HPP
