#ifndef ARBO_ZEROCLIQUE_HPP
#define ARBO_ZEROCLIQUE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "arbo/graph.hpp"
#include "arbo/listing.hpp"

namespace arbo {

// k-partite graph (part labels 0..k-1) with one integer weight per edge,
// indexed by EdgeId. |weight| <= weight_bound.
struct WeightedKPartiteGraph {
  Graph base;
  std::uint32_t k = 0;
  std::vector<std::int64_t> weights;
  std::int64_t weight_bound = 0;

  // Validates labels, k-partiteness, weight count and the bound.
  static WeightedKPartiteGraph make(Graph base, std::uint32_t k, std::vector<std::int64_t> weights,
                                    std::int64_t weight_bound);

  std::int64_t weight(Vertex u, Vertex v) const { return weights[*base.edge_id(u, v)]; }
  std::size_t largest_part() const;
};

// Position of part pair (i, j), i < j, in the order (0,1), (0,2), ..., (k-2,k-1).
constexpr std::size_t pair_index(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  return static_cast<std::size_t>(i) * (2 * k - i - 1) / 2 + (j - i - 1);
}

constexpr std::size_t num_pairs(std::uint32_t k) { return static_cast<std::size_t>(k) * (k - 1) / 2; }

struct HashParams {
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::uint32_t k = 0;
  // y[v * k + j]; for v in part i the entries j != i sum to 0 mod p and
  // y[v * k + i] is 0 and unused.
  std::vector<std::uint64_t> y;

  std::uint64_t offset(Vertex v, std::uint32_t part) const { return y[static_cast<std::size_t>(v) * k + part]; }
};

// Hashed weights, indexed by EdgeId, each in [0, p).
using HashedWeights = std::vector<std::uint64_t>;

// Smallest prime above max(k^2 * weight_bound, n).
std::uint64_t choose_modulus(const WeightedKPartiteGraph& g);

// w'(u, v) = x * w(u, v) + y[u, part(v)] + y[v, part(u)]  (mod p).
// x is uniform in [1, p); each y row draws k-2 entries uniformly and sets the
// last so the row sums to 0. Throws BadModulus unless p is a prime with
// k^2 * weight_bound < p < 2^31.
std::pair<HashedWeights, HashParams> hash_weights(const WeightedKPartiteGraph& g, std::uint64_t p,
                                                  std::uint64_t seed);

// Applies the formula with caller-supplied parameters.
HashedWeights apply_hash(const WeightedKPartiteGraph& g, const HashParams& params);

// s contiguous intervals [i * length, min((i + 1) * length, p)) with
// length = ceil(p / s). When that would leave trailing intervals empty, s is
// reduced to ceil(p / length) and `requested_s` keeps the original.
struct IntervalPartition {
  std::uint64_t p = 0;
  std::uint64_t s = 0;
  std::uint64_t length = 0;
  std::uint64_t requested_s = 0;

  std::uint64_t begin(std::uint64_t i) const { return i * length; }
  std::uint64_t end(std::uint64_t i) const { return std::min((i + 1) * length, p); }
  std::uint64_t index_of(std::uint64_t value) const { return value / length; }
};

// Throws BadS unless 1 <= s <= p.
IntervalPartition partition_intervals(std::uint64_t p, std::uint64_t s);

// One interval index per part pair, in pair_index order.
using BucketKey = std::vector<std::uint32_t>;

// Does the sumset of the key's intervals contain a multiple of p?
bool is_admissible(const IntervalPartition& part, const BucketKey& key);

// Visits every admissible key in lexicographic order. The first C(k,2)-1
// indices are enumerated; for each prefix only the last indices whose
// interval meets the residues completing a zero sum are tried, at most
// C(k,2)+1 of them. Stops early when the visitor returns Flow::kStop.
void for_each_admissible(const IntervalPartition& part, std::uint32_t k,
                         const std::function<Flow(const BucketKey&)>& visit);
std::vector<BucketKey> admissible_tuples(const IntervalPartition& part, std::uint32_t k);

// Same vertex set and labels as g.base; keeps a V_i-V_j edge iff its hashed
// weight lies in interval key[pair_index(i, j)].
Graph extract_bucket(const WeightedKPartiteGraph& g, const HashedWeights& hashed, const BucketKey& key,
                     const IntervalPartition& part);

struct ZeroCliqueWitness {
  CliqueRecord clique;
  std::int64_t sum = 0;  // re-verified on original weights
};

struct SolveReport {
  std::optional<ZeroCliqueWitness> found;
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::uint64_t s = 0;
  std::uint64_t admissible_keys = 0;
  std::uint64_t buckets_examined = 0;
  std::uint64_t cliques_listed_total = 0;
  std::uint64_t max_bucket_cliques = 0;
  double hash_seconds = 0.0;
  double partition_seconds = 0.0;
  double search_seconds = 0.0;
};

struct SolveOptions {
  unsigned threads = 1;
  std::optional<std::uint64_t> modulus;  // defaults to choose_modulus
};

// Hash, partition, and for each admissible key (lexicographic) list the
// k-cliques of its bucket and test their original weight sums. The witness
// from the lexicographically first successful key is returned whatever the
// thread count.
SolveReport solve_zero_kclique(const WeightedKPartiteGraph& g, std::uint32_t k, std::uint64_t s,
                               std::uint64_t seed, const SolveOptions& options = {});

// max(1, round(n^(2 eps / (k^2 - 3k + 2)))). Throws BadEpsilon unless
// 0 < eps < 1, BadArgument for n < 2 or k < 3.
std::uint64_t choose_s(std::uint64_t n, std::uint32_t k, double epsilon);

struct BucketDegreeStats {
  double mean_degree = 0.0;
  std::size_t max_degree = 0;
};

BucketDegreeStats bucket_degree_stats(const Graph& bucket);

}  // namespace arbo

#endif  // ARBO_ZEROCLIQUE_HPP
