#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "arbo/error.hpp"
#include "arbo/generators.hpp"
#include "arbo/listing.hpp"
#include "arbo/oracle.hpp"
#include "support.hpp"

using namespace arbo;
using arbo::test::binomial;
using arbo::test::cliques_of;
using arbo::test::four_cycles_of;
using arbo::test::make_graph;
using arbo::test::triangles_of;

TEST_CASE("canonical record helpers") {
  CHECK(canonical_triangle(5, 1, 3).v == std::array<Vertex, 3>{1, 3, 5});
  const auto want = std::array<Vertex, 4>{1, 2, 7, 4};
  CHECK(canonical_four_cycle(7, 4, 1, 2).v == want);
  CHECK(canonical_four_cycle(1, 4, 7, 2).v == want);
  CHECK(canonical_four_cycle(2, 7, 4, 1).v == want);
}

TEST_CASE("list_triangles examples") {
  CHECK(count_triangles(complete_graph(4)) == 4);
  CHECK(triangles_of(petersen_graph()).first == oracle::brute_triangles(petersen_graph()));
  CHECK(count_triangles(petersen_graph()) == 0);
  const Graph pg = polarity_graph(3);
  CHECK(triangles_of(pg).first == oracle::brute_triangles(pg));
  CHECK(count_triangles(Graph::from_edge_list({}, 4)) == 0);
}

TEST_CASE("all_edge_sparse_triangle") {
  const auto k3 = all_edge_sparse_triangle(complete_graph(3));
  CHECK(std::count(k3.begin(), k3.end(), true) == 3);

  const auto star = all_edge_sparse_triangle(star_graph(5));
  CHECK(std::count(star.begin(), star.end(), true) == 0);

  const Graph pendant = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const auto flags = all_edge_sparse_triangle(pendant);
  CHECK(std::count(flags.begin(), flags.end(), true) == 3);
  CHECK_FALSE(flags[*pendant.edge_id(2, 3)]);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_gnm(30, 80, seed);
    const auto got = all_edge_sparse_triangle(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      bool expect = false;
      for (Vertex w = 0; w < g.num_vertices(); ++w)
        expect = expect || (g.has_edge(g.edge(e).u, w) && g.has_edge(g.edge(e).v, w));
      CHECK(got[e] == expect);
    }
  }
}

TEST_CASE("list_4cycles examples") {
  CHECK(count_4cycles(complete_bipartite(2, 2)) == 1);
  CHECK(four_cycles_of(complete_bipartite(2, 3)).first == oracle::brute_4cycles(complete_bipartite(2, 3)));
  CHECK(count_4cycles(complete_bipartite(2, 3)) == 3);
  CHECK(count_4cycles(polarity_graph(5)) == 0);
  CHECK(oracle::brute_4cycles(polarity_graph(5)).empty());
  // Brute force over the three pairings of K_4's vertices.
  CHECK(oracle::brute_4cycles(complete_graph(4)).size() == 3);
  CHECK(count_4cycles(complete_graph(4)) == 3);
}

TEST_CASE("list_kcliques examples") {
  CHECK(count_kcliques(complete_graph(6), 4) == 15);
  CHECK(count_kcliques(cycle_graph(5), 3) == 0);
  CHECK(count_kcliques(complete_graph(5), 5) == 1);
  const Graph g = random_gnm(12, 33, 2024);
  CHECK(cliques_of(g, 4).first == oracle::brute_kcliques(g, 4));
  CHECK(count_kcliques(g, 2) == g.num_edges());
  try {
    count_kcliques(g, 1);
    FAIL("expected KTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kKTooSmall);
  }
}

TEST_CASE("listers agree with the oracles, exactly once, in canonical form") {
  for (const Graph& g : arbo::test::mixed_corpus(60, 5)) {
    const auto [tri, tst] = triangles_of(g);
    CHECK(tri == oracle::brute_triangles(g));
    CHECK(tst.emitted == tri.size());
    for (const auto& t : tri) CHECK((t.v[0] < t.v[1] && t.v[1] < t.v[2]));

    const auto [cyc, cst] = four_cycles_of(g);
    CHECK(cyc == oracle::brute_4cycles(g));
    CHECK(cst.emitted == cyc.size());
    for (const auto& c : cyc) {
      CHECK((c.v[0] < c.v[1] && c.v[0] < c.v[2] && c.v[1] < c.v[3]));
      for (std::size_t i = 0; i < 4; ++i) CHECK(g.has_edge(c.v[i], c.v[(i + 1) % 4]));
    }

    for (std::uint32_t k : {3u, 4u, 5u}) {
      const auto [cl, kst] = cliques_of(g, k);
      CHECK(cl == oracle::brute_kcliques(g, k));
      CHECK(kst.emitted == cl.size());
      for (const auto& c : cl) CHECK(std::is_sorted(c.v.begin(), c.v.end()));
    }
  }
}

TEST_CASE("counting identities") {
  for (std::size_t n = 0; n <= 12; ++n) {
    const Graph kn = complete_graph(n);
    CHECK(count_triangles(kn) == binomial(n, 3));
    for (std::uint32_t k = 2; k <= 6; ++k) CHECK(count_kcliques(kn, k) == binomial(n, k));
  }
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = 1; b <= 8; ++b)
      CHECK(count_4cycles(complete_bipartite(a, b)) == binomial(a, 2) * binomial(b, 2));
}

TEST_CASE("sinks can stop enumeration") {
  const Graph g = complete_graph(10);
  int seen = 0;
  auto stop_at_3 = [&](const auto&) { return ++seen == 3 ? Flow::kStop : Flow::kContinue; };
  auto st = list_triangles(g, stop_at_3);
  CHECK(st.emitted == 3);
  CHECK(st.stopped);
  seen = 0;
  st = list_4cycles(g, stop_at_3);
  CHECK(st.emitted == 3);
  seen = 0;
  st = list_kcliques(g, 4, stop_at_3);
  CHECK(st.emitted == 3);
  seen = 0;
  st = list_kcliques(g, 2, stop_at_3);
  CHECK(st.emitted == 3);
}

TEST_CASE("work bounds") {
  std::vector<Graph> corpus = arbo::test::mixed_corpus(40, 11);
  corpus.push_back(star_graph(500));
  corpus.push_back(polarity_graph(23));
  for (const Graph& g : corpus) {
    const double m = double(g.num_edges());
    const double d = std::max<double>(1, degeneracy_ordering(g).degeneracy);
    CHECK(double(list_triangles(g, [](const auto&) { return Flow::kContinue; }).steps) <= 2.0 * m * d);
    for (std::uint32_t k : {3u, 4u}) {
      const auto st = list_kcliques(g, k, [](const auto&) { return Flow::kContinue; });
      CHECK(double(st.steps) <= double(g.num_vertices()) + double(k) * m * std::pow(d, k - 2.0));
    }
    // 4-cycle preprocessing sums min-degree over edges, at most 2 m alpha
    // <= 2 m degeneracy; the output phase is linear in t.
    const auto c4 = list_4cycles(g, [](const auto&) { return Flow::kContinue; });
    CHECK(double(c4.steps) <= 4.0 * m * d);
    CHECK(c4.emit_steps <= 2 * c4.emitted);
  }
}

TEST_CASE("4-cycle emit time is linear in the number of cycles") {
  // K_{2,b} has C(b,2) cycles from 2b edges; t spans a 16x range.
  auto per_cycle = [](std::size_t b) {
    const Graph g = complete_bipartite(2, b);
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
      const auto st = list_4cycles(g, [](const FourCycleRecord&) { return Flow::kContinue; });
      best = std::min(best, st.emit_seconds / double(st.emitted));
      CHECK(st.max_gap_seconds >= 0.0);
    }
    return best;
  };
  const double small = per_cycle(256);   // t = 32640
  const double large = per_cycle(1024);  // t = 523776
  const double ratio = std::max(small, large) / std::min(small, large);
  CHECK(ratio <= 4.0);
}
