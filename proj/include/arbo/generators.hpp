#ifndef ARBO_GENERATORS_HPP
#define ARBO_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "arbo/graph.hpp"
#include "arbo/listing.hpp"
#include "arbo/zeroclique.hpp"

namespace arbo {

// Point-line polarity graph of PG(2, q): vertices are the q^2+q+1 projective
// points over Z_q, each stored with its first nonzero coordinate equal to 1;
// distinct x, y are adjacent iff x.y = 0 (mod q). 4-cycle free with maximum
// degree q+1. Throws NotPrime.
Graph polarity_graph(std::uint32_t q);

// Uniform simple graph with exactly m edges, deterministic per seed.
// Throws TooManyEdges when m > C(n, 2).
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

// Disjoint union; vertices of `b` are shifted past those of `a`. Labels are
// kept only when both sides carry them.
Graph disjoint_union(const Graph& a, const Graph& b);

// Labels every vertex uniformly from [0, k) and drops the edges whose ends
// share a label.
Graph color_code(const Graph& g, std::uint32_t k, std::uint64_t seed);
// Same with fixed labels.
Graph color_code_with(const Graph& g, std::vector<PartId> labels);

// Each vertex of each part joined to each vertex of every other part
// independently with probability `density`; labels are part indices and
// parts occupy consecutive id ranges.
Graph random_kpartite(std::uint32_t k, std::size_t part_size, double density, std::uint64_t seed);

enum class CycleOrigin { kTriangle, kFourCycle };

// Output of the triangle-to-4-cycle gadget. Vertices of g keep their ids; the
// copy of C vertex c is c_copy[index of c within C], placed after g's vertices.
// Part labels: A = 0, B = 1, C = 2, C' = 3.
struct ReductionInstance {
  Graph graph;
  std::vector<Vertex> c_vertices;
  std::vector<Vertex> c_copy;
  std::uint64_t source_triangle_count = 0;
  std::uint64_t source_4cycle_count = 0;

  // A 4-cycle of `graph` through a C-C' matching edge comes from a triangle
  // of the source; any other from a 4-cycle of the source.
  CycleOrigin origin(const FourCycleRecord& cycle) const;
  bool is_matching_edge(Vertex u, Vertex v) const;
};

// Parts A, B, C are labels 0, 1, 2 of g. Keeps E(A,B) and E(B,C), redirects
// every A-C edge to the copy of its C endpoint, and matches each C vertex to
// its copy. Throws NotTripartite.
ReductionInstance triangle_to_4cycle_transform(const Graph& g);

// g plus `copies` disjoint polarity_graph(q) components appended after g's
// vertices. Labels are dropped. Throws NotPrime.
Graph pad_with_c4free(const Graph& g, std::size_t copies, std::uint32_t q);

struct SparseTriangleShape {
  std::size_t vertices = 0;   // ceil(n^(1 - sigma)), split evenly into three parts
  std::size_t degree_cap = 0;  // ceil(n^(0.5 - sigma))
};

SparseTriangleShape sparse_triangle_shape(double n_param, double sigma);

// Random tripartite graph with the shape above, built from random matchings
// layered over the part pairs (A,B), (B,C), (C,A) in turn; an edge is skipped
// when it would exceed the degree cap. Throws BadSigma unless 0 < sigma < 0.5.
Graph sparse_triangle_instance(double n_param, double sigma, std::uint64_t seed);

// Random weighted k-partite instance: edges as in random_kpartite, weights
// uniform in [-weight_bound, weight_bound]. With `plant`, one vertex per part
// is chosen, the clique on them is forced present and its weights are redrawn
// until they sum to zero.
WeightedKPartiteGraph random_weighted_kpartite(std::uint32_t k, std::size_t part_size, double density,
                                               std::int64_t weight_bound, bool plant, std::uint64_t seed);

}  // namespace arbo

#endif  // ARBO_GENERATORS_HPP
