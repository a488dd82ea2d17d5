#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "arbo/error.hpp"
#include "arbo/generators.hpp"
#include "arbo/oracle.hpp"
#include "arbo/primes.hpp"
#include "arbo/zeroclique.hpp"
#include "support.hpp"

using namespace arbo;
using arbo::test::make_graph;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kBadArgument;
}

std::int64_t clique_weight(const WeightedKPartiteGraph& g, const CliqueRecord& c) {
  std::int64_t s = 0;
  for (std::size_t a = 0; a < c.v.size(); ++a)
    for (std::size_t b = a + 1; b < c.v.size(); ++b) s += g.weight(c.v[a], c.v[b]);
  return s;
}

std::uint64_t hashed_weight(const WeightedKPartiteGraph& g, const HashedWeights& h, const CliqueRecord& c,
                            std::uint64_t p) {
  std::uint64_t s = 0;
  for (std::size_t a = 0; a < c.v.size(); ++a)
    for (std::size_t b = a + 1; b < c.v.size(); ++b) s = (s + h[*g.base.edge_id(c.v[a], c.v[b])]) % p;
  return s;
}

std::uint64_t mod(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % sp) + sp) % sp);
}

// Enumerates every residue of every interval: the literal sumset test.
std::set<BucketKey> brute_admissible(const IntervalPartition& part, std::uint32_t k) {
  const std::size_t pairs = num_pairs(k);
  std::set<BucketKey> out;
  BucketKey key(pairs, 0);
  while (true) {
    std::set<std::uint64_t> sums{0};
    for (std::uint32_t idx : key) {
      std::set<std::uint64_t> next;
      for (auto s : sums)
        for (std::uint64_t v = part.begin(idx); v < part.end(idx); ++v) next.insert((s + v) % part.p);
      sums = std::move(next);
    }
    if (sums.contains(0)) out.insert(key);
    std::size_t i = pairs;
    while (i > 0) {
      --i;
      if (++key[i] < part.s) break;
      key[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace

TEST_CASE("pair index order") {
  CHECK(pair_index(0, 1, 3) == 0);
  CHECK(pair_index(0, 2, 3) == 1);
  CHECK(pair_index(1, 2, 3) == 2);
  std::size_t expect = 0;
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = i + 1; j < 6; ++j) CHECK(pair_index(i, j, 6) == expect++);
  CHECK(num_pairs(6) == expect);
}

TEST_CASE("hash formula and row constraint") {
  Graph g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}}).with_part_labels({0, 1, 2});
  const auto wg = WeightedKPartiteGraph::make(std::move(g), 3, {5, 5, 5}, 5);
  HashParams params;
  params.p = 13;
  params.x = 2;
  params.k = 3;
  params.y.assign(9, 0);
  for (auto w : apply_hash(wg, params)) CHECK(w == 10);

  const auto inst = random_weighted_kpartite(4, 7, 0.6, 30, false, 3);
  const auto [hashed, hp] = hash_weights(inst, choose_modulus(inst), 11);
  CHECK(hp.x >= 1);
  CHECK(hp.x < hp.p);
  for (Vertex v = 0; v < inst.base.num_vertices(); ++v) {
    const PartId own = inst.base.part_of(v);
    std::uint64_t sum = 0;
    for (std::uint32_t j = 0; j < 4; ++j) {
      CHECK(hp.offset(v, j) < hp.p);
      if (j != own) sum = (sum + hp.offset(v, j)) % hp.p;
    }
    CHECK(sum == 0);
    CHECK(hp.offset(v, own) == 0);
  }
  for (auto w : hashed) CHECK(w < hp.p);
}

TEST_CASE("hashing cancels the offsets on every clique") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::uint32_t k = 3 + seed % 3;
    const auto wg = random_weighted_kpartite(k, 6, 0.7, 40, seed % 2 == 0, seed);
    const std::uint64_t p = choose_modulus(wg);
    CHECK(is_prime(p));
    CHECK(p > std::uint64_t(k) * k * 40);
    const auto [hashed, hp] = hash_weights(wg, p, seed * 7);
    for (const auto& c : oracle::brute_kcliques(wg.base, k)) {
      const std::int64_t w = clique_weight(wg, c);
      CHECK(hashed_weight(wg, hashed, c, p) == hp.x * mod(w, p) % p);
      if (w == 0) CHECK(hashed_weight(wg, hashed, c, p) == 0);
    }
  }
}

TEST_CASE("hash modulus checks") {
  const auto wg = random_weighted_kpartite(3, 4, 0.5, 10, false, 1);
  CHECK(error_of([&] { hash_weights(wg, 91, 1); }) == ErrorCode::kBadModulus);   // 7 * 13
  CHECK(error_of([&] { hash_weights(wg, 89, 1); }) == ErrorCode::kBadModulus);   // <= 9 * 10
  CHECK_NOTHROW(hash_weights(wg, 97, 1));
  CHECK(choose_modulus(wg) == 97);
}

TEST_CASE("hashed differences look uniform") {
  // Two disjoint edges between parts 0 and 1; their hashed difference over
  // many re-hashes should spread across residues.
  Graph g = make_graph(6, {{0, 2}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {3, 5}}).with_part_labels({0, 0, 1, 1, 2, 2});
  const auto wg = WeightedKPartiteGraph::make(std::move(g), 3, {1, -2, 3, 4, -1, 2}, 4);
  const std::uint64_t p = choose_modulus(wg);
  CHECK(p == 37);
  const EdgeId e1 = *wg.base.edge_id(0, 2), e2 = *wg.base.edge_id(1, 3);
  std::map<std::uint64_t, int> freq;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const auto [h, hp] = hash_weights(wg, p, std::uint64_t(t));
    ++freq[(h[e1] + p - h[e2]) % p];
  }
  const double uniform = double(trials) / double(p);
  for (auto [residue, count] : freq) CHECK(double(count) <= 3 * uniform);
}

TEST_CASE("interval partition") {
  const auto a = partition_intervals(13, 4);
  CHECK(a.s == 4);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> want{{0, 4}, {4, 8}, {8, 12}, {12, 13}};
  for (std::uint64_t i = 0; i < 4; ++i) {
    CHECK(a.begin(i) == want[i].first);
    CHECK(a.end(i) == want[i].second);
  }
  const auto b = partition_intervals(10, 1);
  CHECK(b.s == 1);
  CHECK(b.end(0) == 10);
  const auto c = partition_intervals(7, 7);
  for (std::uint64_t i = 0; i < 7; ++i) CHECK(c.end(i) - c.begin(i) == 1);

  const auto d = partition_intervals(10, 6);  // length 2 leaves room for 5
  CHECK(d.s == 5);
  CHECK(d.requested_s == 6);
  CHECK(d.end(4) == 10);

  CHECK(error_of([] { partition_intervals(13, 0); }) == ErrorCode::kBadS);
  CHECK(error_of([] { partition_intervals(13, 14); }) == ErrorCode::kBadS);
}

TEST_CASE("admissible tuples") {
  const auto one = admissible_tuples(partition_intervals(13, 1), 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == BucketKey{0, 0, 0});

  const auto part = partition_intervals(13, 4);
  const auto keys = admissible_tuples(part, 3);
  CHECK(std::set<BucketKey>(keys.begin(), keys.end()) == brute_admissible(part, 3));
  CHECK(std::is_sorted(keys.begin(), keys.end()));

  for (std::uint64_t p : {5u, 11u, 13u, 17u, 31u}) {
    for (std::uint32_t k : {2u, 3u, 4u}) {
      for (std::uint64_t s = 1; s <= std::min<std::uint64_t>(p, k == 4 ? 3 : 6); ++s) {
        const auto pt = partition_intervals(p, s);
        const auto ks = admissible_tuples(pt, k);
        const std::set<BucketKey> unique(ks.begin(), ks.end());
        CHECK(unique.size() == ks.size());
        const double pairs = double(num_pairs(k));
        CHECK(double(ks.size()) <= (pairs + 1) * std::pow(double(pt.s), pairs - 1));
        if (p <= 13) CHECK(unique == brute_admissible(pt, k));
        for (const auto& key : ks) CHECK(is_admissible(pt, key));
      }
    }
  }
}

TEST_CASE("bucket extraction") {
  const auto wg = random_weighted_kpartite(3, 10, 0.6, 25, false, 8);
  const auto [hashed, hp] = hash_weights(wg, choose_modulus(wg), 4);

  const auto whole = partition_intervals(hp.p, 1);
  CHECK(extract_bucket(wg, hashed, {0, 0, 0}, whole) == wg.base);

  const auto part = partition_intervals(hp.p, 3);
  std::vector<int> hits(wg.base.num_edges(), 0);
  for (std::uint32_t a = 0; a < part.s; ++a)
    for (std::uint32_t b = 0; b < part.s; ++b)
      for (std::uint32_t c = 0; c < part.s; ++c) {
        const BucketKey key{a, b, c};
        const Graph bucket = extract_bucket(wg, hashed, key, part);
        CHECK(validate_kpartite(bucket, 3));
        for (const Edge& e : bucket.edges()) {
          const std::size_t cls = pair_index(std::min(wg.base.part_of(e.u), wg.base.part_of(e.v)),
                                             std::max(wg.base.part_of(e.u), wg.base.part_of(e.v)), 3);
          // Count each edge once per pair class: only in buckets whose other
          // indices are zero.
          bool canonical = true;
          for (std::size_t l = 0; l < 3; ++l) canonical = canonical && (l == cls || key[l] == 0);
          if (canonical) ++hits[*wg.base.edge_id(e.u, e.v)];
        }
      }
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("bucket degrees concentrate around deg / s") {
  const auto wg = random_weighted_kpartite(3, 60, 1.0, 1000, false, 21);
  const auto [hashed, hp] = hash_weights(wg, choose_modulus(wg), 5);
  const std::uint64_t s = 5;
  const auto part = partition_intervals(hp.p, s);
  const auto keys = admissible_tuples(part, 3);
  std::size_t ok = 0, total = 0;
  for (std::size_t i = 0; i < keys.size(); i += keys.size() / 10) {
    const Graph bucket = extract_bucket(wg, hashed, keys[i], part);
    for (Vertex v = 0; v < bucket.num_vertices(); ++v) {
      ++total;
      ok += double(bucket.degree(v)) <= 4.0 * double(wg.base.degree(v)) / double(s) + 8 ? 1 : 0;
    }
  }
  CHECK(double(ok) >= 0.99 * double(total));
}

TEST_CASE("solve_zero_kclique examples") {
  const auto planted = random_weighted_kpartite(3, 8, 0.5, 50, true, 77);
  const SolveReport r = solve_zero_kclique(planted, 3, 3, 5);
  REQUIRE(r.found);
  CHECK(r.found->sum == 0);
  CHECK(clique_weight(planted, r.found->clique) == 0);
  CHECK(oracle::brute_zero_kclique(planted).has_value());

  Graph g = random_kpartite(3, 6, 1.0, 2);
  std::vector<std::int64_t> ones(g.num_edges(), 1);
  const auto all_ones = WeightedKPartiteGraph::make(std::move(g), 3, std::move(ones), 1);
  const SolveReport none = solve_zero_kclique(all_ones, 3, 2, 1);
  CHECK_FALSE(none.found);
  CHECK(none.cliques_listed_total <= 216);

  int agree = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto wg = random_weighted_kpartite(4, 6, 0.6, 50, false, 1000 + seed);
    const bool expect = oracle::brute_zero_kclique(wg).has_value();
    const SolveReport rep = solve_zero_kclique(wg, 4, 2, seed);
    agree += rep.found.has_value() == expect ? 1 : 0;
    if (rep.found) CHECK(clique_weight(wg, rep.found->clique) == 0);
  }
  CHECK(agree == 100);
}

TEST_CASE("solver is deterministic across thread counts") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto wg = random_weighted_kpartite(3, 12, 0.8, 50, true, seed);
    SolveOptions many;
    many.threads = 4;
    const auto a = solve_zero_kclique(wg, 3, 4, seed);
    const auto b = solve_zero_kclique(wg, 3, 4, seed, many);
    REQUIRE(a.found);
    REQUIRE(b.found);
    CHECK(a.found->clique == b.found->clique);
  }
}

TEST_CASE("solver argument checks") {
  const auto wg = random_weighted_kpartite(3, 4, 0.5, 10, false, 1);
  CHECK(error_of([&] { solve_zero_kclique(wg, 4, 1, 1); }) == ErrorCode::kBadArgument);
  CHECK(error_of([&] { solve_zero_kclique(wg, 2, 1, 1); }) == ErrorCode::kKTooSmall);
  CHECK(error_of([&] { solve_zero_kclique(wg, 3, 0, 1); }) == ErrorCode::kBadS);
}

TEST_CASE("choose_s") {
  CHECK(choose_s(10000, 3, 1e-9) == 1);
  CHECK(choose_s(10000, 3, 0.2) == 6);
  CHECK(choose_s(256, 4, 0.3) == 2);
  CHECK(error_of([] { choose_s(100, 3, 0.0); }) == ErrorCode::kBadEpsilon);
  CHECK(error_of([] { choose_s(100, 3, 1.0); }) == ErrorCode::kBadEpsilon);
}
