#ifndef ARBO_LISTING_HPP
#define ARBO_LISTING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "arbo/graph.hpp"

namespace arbo {

// Sorted vertex triple a < b < c.
struct TriangleRecord {
  std::array<Vertex, 3> v;

  friend auto operator<=>(const TriangleRecord&, const TriangleRecord&) = default;
};

// Cyclic order a-b-c-d with a the smallest vertex and b < d.
struct FourCycleRecord {
  std::array<Vertex, 4> v;

  friend auto operator<=>(const FourCycleRecord&, const FourCycleRecord&) = default;
};

// Strictly ascending clique vertices.
struct CliqueRecord {
  std::vector<Vertex> v;

  friend auto operator<=>(const CliqueRecord&, const CliqueRecord&) = default;
};

TriangleRecord canonical_triangle(Vertex a, Vertex b, Vertex c);
// The cycle a-b-c-d-a, in any rotation or direction.
FourCycleRecord canonical_four_cycle(Vertex a, Vertex b, Vertex c, Vertex d);

enum class Flow { kContinue, kStop };

template <typename Record>
using Sink = std::function<Flow(const Record&)>;

struct EnumerationStats {
  double preprocess_seconds = 0.0;
  double emit_seconds = 0.0;
  std::uint64_t emitted = 0;
  double max_gap_seconds = 0.0;
  std::uint64_t steps = 0;       // inner-loop steps, preprocessing and search
  std::uint64_t emit_steps = 0;  // 4-cycles only: work spent in the output phase
  bool stopped = false;
};

// Degeneracy order; each vertex marks its later neighbors and scans their
// later neighbors for marks. Work is O(m * degeneracy).
EnumerationStats list_triangles(const Graph& g, const Sink<TriangleRecord>& sink);

// Indexed by EdgeId: true iff the edge lies in some triangle.
std::vector<bool> all_edge_sparse_triangle(const Graph& g);

// Two phases. Preprocessing groups, for each vertex v in non-increasing
// degree order, the two-hop paths v-u-w through later vertices by their end
// w; the output phase then emits every pair of middles of each group, so the
// delay between records is O(1).
EnumerationStats list_4cycles(const Graph& g, const Sink<FourCycleRecord>& sink);

// Throws KTooSmall for k < 2. For k >= 3 recurses on the later neighborhood
// of each vertex in degeneracy order.
EnumerationStats list_kcliques(const Graph& g, std::uint32_t k, const Sink<CliqueRecord>& sink);

std::uint64_t count_triangles(const Graph& g);
std::uint64_t count_4cycles(const Graph& g);
std::uint64_t count_kcliques(const Graph& g, std::uint32_t k);

}  // namespace arbo

#endif  // ARBO_LISTING_HPP
