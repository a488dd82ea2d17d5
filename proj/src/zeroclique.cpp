#include "arbo/zeroclique.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "arbo/error.hpp"
#include "arbo/primes.hpp"

namespace arbo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::uint64_t reduce(std::int64_t w, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((w % sp) + sp) % sp);
}

std::vector<std::vector<Vertex>> split_parts(const Graph& g, std::uint32_t k) {
  std::vector<std::vector<Vertex>> parts(k);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) parts[g.part_of(Vertex(v))].push_back(Vertex(v));
  return parts;
}

}  // namespace

WeightedKPartiteGraph WeightedKPartiteGraph::make(Graph base, std::uint32_t k, std::vector<std::int64_t> weights,
                                                  std::int64_t weight_bound) {
  if (!validate_kpartite(base, k)) {
    throw Error(ErrorCode::kBadArgument, "graph is not " + std::to_string(k) + "-partite under its labels");
  }
  if (weights.size() != base.num_edges()) {
    throw Error(ErrorCode::kBadArgument, "expected " + std::to_string(base.num_edges()) + " weights, got " +
                                             std::to_string(weights.size()));
  }
  if (weight_bound < 0) throw Error(ErrorCode::kBadArgument, "negative weight bound");
  for (std::int64_t w : weights) {
    if (w > weight_bound || w < -weight_bound) {
      throw Error(ErrorCode::kBadArgument,
                  "weight " + std::to_string(w) + " exceeds bound " + std::to_string(weight_bound));
    }
  }
  return WeightedKPartiteGraph{std::move(base), k, std::move(weights), weight_bound};
}

std::size_t WeightedKPartiteGraph::largest_part() const {
  std::vector<std::size_t> sizes(k, 0);
  for (PartId label : base.part_labels()) ++sizes[label];
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

std::uint64_t choose_modulus(const WeightedKPartiteGraph& g) {
  const auto floor = std::max<std::uint64_t>(static_cast<std::uint64_t>(g.k) * g.k * g.weight_bound,
                                             g.base.num_vertices());
  return next_prime_above(floor);
}

HashedWeights apply_hash(const WeightedKPartiteGraph& g, const HashParams& params) {
  const std::uint64_t p = params.p;
  HashedWeights out(g.base.num_edges());
  for (EdgeId e = 0; e < out.size(); ++e) {
    const auto [u, v] = g.base.edge(e);
    const PartId i = g.base.part_of(u);
    const PartId j = g.base.part_of(v);
    out[e] = (params.x * reduce(g.weights[e], p) % p + params.offset(u, j) + params.offset(v, i)) % p;
  }
  return out;
}

std::pair<HashedWeights, HashParams> hash_weights(const WeightedKPartiteGraph& g, std::uint64_t p,
                                                  std::uint64_t seed) {
  const std::uint32_t k = g.k;
  const auto need = static_cast<std::uint64_t>(k) * k * static_cast<std::uint64_t>(g.weight_bound);
  if (!is_prime(p) || p <= need || p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::kBadModulus, "p=" + std::to_string(p) + " must be a prime in (" +
                                            std::to_string(need) + ", 2^31)");
  }
  if (k < 2) throw Error(ErrorCode::kBadArgument, "k=" + std::to_string(k));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
  std::uniform_int_distribution<std::uint64_t> any(0, p - 1);

  HashParams params;
  params.p = p;
  params.k = k;
  params.x = nonzero(rng);
  params.y.assign(g.base.num_vertices() * k, 0);
  for (std::size_t v = 0; v < g.base.num_vertices(); ++v) {
    const PartId own = g.base.part_of(Vertex(v));
    std::uint64_t sum = 0;
    std::uint32_t last = 0;
    for (std::uint32_t j = 0; j < k; ++j) {
      if (j == own) continue;
      last = j;
    }
    for (std::uint32_t j = 0; j < k; ++j) {
      if (j == own || j == last) continue;
      const std::uint64_t r = any(rng);
      params.y[v * k + j] = r;
      sum = (sum + r) % p;
    }
    params.y[v * k + last] = (p - sum) % p;
  }
  return {apply_hash(g, params), std::move(params)};
}

IntervalPartition partition_intervals(std::uint64_t p, std::uint64_t s) {
  if (s < 1 || s > p) {
    throw Error(ErrorCode::kBadS, "s=" + std::to_string(s) + " outside [1, p=" + std::to_string(p) + "]");
  }
  IntervalPartition part;
  part.p = p;
  part.requested_s = s;
  part.length = (p + s - 1) / s;
  part.s = (p + part.length - 1) / part.length;
  return part;
}

bool is_admissible(const IntervalPartition& part, const BucketKey& key) {
  std::uint64_t lo = 0, hi = 0;
  for (std::uint32_t idx : key) {
    lo += part.begin(idx);
    hi += part.end(idx) - 1;
  }
  const std::uint64_t first_multiple = (lo + part.p - 1) / part.p * part.p;
  return first_multiple <= hi;
}

void for_each_admissible(const IntervalPartition& part, std::uint32_t k,
                         const std::function<Flow(const BucketKey&)>& visit) {
  const std::size_t pairs = num_pairs(k);
  if (pairs == 0) return;
  const std::uint64_t p = part.p;
  BucketKey key(pairs, 0);
  std::vector<std::uint32_t> last;

  while (true) {
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i + 1 < pairs; ++i) {
      lo += part.begin(key[i]);
      hi += part.end(key[i]) - 1;
    }
    // The last weight must fall among the residues -z mod p, z in [lo, hi].
    last.clear();
    auto take = [&](std::uint64_t from, std::uint64_t to) {
      for (std::uint64_t i = part.index_of(from); i <= part.index_of(to); ++i) last.push_back(std::uint32_t(i));
    };
    if (hi - lo + 1 >= p) {
      take(0, p - 1);
    } else {
      const std::uint64_t r0 = (p - hi % p) % p;
      const std::uint64_t r1 = (p - lo % p) % p;
      if (r0 <= r1) {
        take(r0, r1);
      } else {
        take(0, r1);
        take(r0, p - 1);
      }
    }
    std::sort(last.begin(), last.end());
    last.erase(std::unique(last.begin(), last.end()), last.end());
    for (std::uint32_t idx : last) {
      key[pairs - 1] = idx;
      if (visit(key) == Flow::kStop) return;
    }

    std::size_t i = pairs - 1;
    while (true) {
      if (i == 0) return;
      --i;
      if (++key[i] < part.s) break;
      key[i] = 0;
    }
  }
}

std::vector<BucketKey> admissible_tuples(const IntervalPartition& part, std::uint32_t k) {
  std::vector<BucketKey> keys;
  for_each_admissible(part, k, [&](const BucketKey& key) {
    keys.push_back(key);
    return Flow::kContinue;
  });
  return keys;
}

Graph extract_bucket(const WeightedKPartiteGraph& g, const HashedWeights& hashed, const BucketKey& key,
                     const IntervalPartition& part) {
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.base.num_edges(); ++e) {
    const Edge& edge = g.base.edge(e);
    PartId i = g.base.part_of(edge.u);
    PartId j = g.base.part_of(edge.v);
    if (i > j) std::swap(i, j);
    if (part.index_of(hashed[e]) == key[pair_index(i, j, g.k)]) kept.push_back(edge);
  }
  return Graph::from_edge_list(kept, g.base.num_vertices()).with_part_labels(g.base.part_labels());
}

SolveReport solve_zero_kclique(const WeightedKPartiteGraph& g, std::uint32_t k, std::uint64_t s,
                               std::uint64_t seed, const SolveOptions& options) {
  if (k < 3) throw Error(ErrorCode::kKTooSmall, "zero-clique search needs k>=3, got " + std::to_string(k));
  if (k != g.k) {
    throw Error(ErrorCode::kBadArgument,
                "k=" + std::to_string(k) + " but the graph has " + std::to_string(g.k) + " parts");
  }
  for (const auto& part : split_parts(g.base, k)) {
    if (part.empty()) throw Error(ErrorCode::kBadArgument, "empty part");
  }

  SolveReport report;
  auto t = Clock::now();
  report.p = options.modulus.value_or(choose_modulus(g));
  const auto [hashed, params] = hash_weights(g, report.p, seed);
  report.x = params.x;
  report.hash_seconds = seconds_since(t);

  t = Clock::now();
  const IntervalPartition part = partition_intervals(report.p, s);
  report.s = part.s;
  const std::vector<BucketKey> keys = admissible_tuples(part, k);
  report.admissible_keys = keys.size();
  report.partition_seconds = seconds_since(t);

  t = Clock::now();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;

  auto worker = [&] {
    std::uint64_t examined = 0, listed = 0, widest = 0;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= keys.size() || i > best.load()) break;
      ++examined;
      const Graph bucket = extract_bucket(g, hashed, keys[i], part);
      std::optional<ZeroCliqueWitness> witness;
      const auto stats = list_kcliques(bucket, k, [&](const CliqueRecord& c) {
        std::int64_t sum = 0;
        for (std::size_t a = 0; a < c.v.size(); ++a)
          for (std::size_t b = a + 1; b < c.v.size(); ++b) sum += g.weight(c.v[a], c.v[b]);
        if (sum != 0) return Flow::kContinue;
        witness = ZeroCliqueWitness{c, sum};
        return Flow::kStop;
      });
      listed += stats.emitted;
      widest = std::max(widest, stats.emitted);
      if (witness) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          report.found = std::move(witness);
        }
      }
    }
    std::lock_guard lock(mu);
    report.buckets_examined += examined;
    report.cliques_listed_total += listed;
    report.max_bucket_cliques = std::max(report.max_bucket_cliques, widest);
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  report.search_seconds = seconds_since(t);
  return report;
}

std::uint64_t choose_s(std::uint64_t n, std::uint32_t k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kBadEpsilon, "epsilon=" + std::to_string(epsilon) + " outside (0,1)");
  }
  if (n < 2 || k < 3) {
    throw Error(ErrorCode::kBadArgument, "choose_s needs n>=2 and k>=3");
  }
  const double exponent = 2.0 * epsilon / (static_cast<double>(k) * k - 3.0 * k + 2.0);
  const double s = std::round(std::pow(static_cast<double>(n), exponent));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(s));
}

BucketDegreeStats bucket_degree_stats(const Graph& bucket) {
  BucketDegreeStats st;
  const std::size_t n = bucket.num_vertices();
  if (n == 0) return st;
  st.mean_degree = 2.0 * static_cast<double>(bucket.num_edges()) / static_cast<double>(n);
  st.max_degree = bucket.max_degree();
  return st;
}

}  // namespace arbo
