#include "arbo/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>

#include "arbo/error.hpp"
#include "arbo/generators.hpp"
#include "arbo/graph.hpp"
#include "arbo/listing.hpp"
#include "arbo/zeroclique.hpp"

namespace arbo {

namespace {

BenchRecord describe(std::string gen, const Graph& g, std::string algo, const EnumerationStats& st) {
  BenchRecord r;
  r.gen = std::move(gen);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.alpha_proxy = degeneracy_ordering(g).degeneracy;
  r.algo = std::move(algo);
  r.pre_s = st.preprocess_seconds;
  r.emit_s = st.emit_seconds;
  r.count = st.emitted;
  r.steps = st.steps + st.emit_steps;
  return r;
}

template <typename Record>
Sink<Record> discard() {
  return [](const Record&) { return Flow::kContinue; };
}

Graph k22_blocks(std::size_t blocks) {
  std::vector<Edge> edges;
  edges.reserve(4 * blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto o = static_cast<Vertex>(4 * b);
    edges.insert(edges.end(), {{o, Vertex(o + 2)}, {o, Vertex(o + 3)}, {Vertex(o + 1), Vertex(o + 2)},
                               {Vertex(o + 1), Vertex(o + 3)}});
  }
  return Graph::from_edge_list(edges, 4 * blocks);
}

std::string field(std::string_view& rest) {
  const auto comma = rest.find(',');
  std::string out(rest.substr(0, comma));
  rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  return out;
}

template <typename T>
T number(const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "bad CSV number '" + text + "'");
  }
  return value;
}

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

BenchSuite parse_bench_suite(std::string_view name) {
  if (name == "triangle-scaling") return BenchSuite::kTriangleScaling;
  if (name == "c4-delay") return BenchSuite::kC4Delay;
  if (name == "clique-scaling") return BenchSuite::kCliqueScaling;
  if (name == "zeroclique") return BenchSuite::kZeroClique;
  throw Error(ErrorCode::kBadArgument,
              "unknown suite '" + std::string(name) + "' (triangle-scaling, c4-delay, clique-scaling, zeroclique)");
}

std::string_view to_string(BenchSuite suite) {
  switch (suite) {
    case BenchSuite::kTriangleScaling: return "triangle-scaling";
    case BenchSuite::kC4Delay: return "c4-delay";
    case BenchSuite::kCliqueScaling: return "clique-scaling";
    case BenchSuite::kZeroClique: return "zeroclique";
  }
  return "?";
}

std::vector<BenchRecord> run_bench_suite(BenchSuite suite) {
  std::vector<BenchRecord> rows;
  switch (suite) {
    case BenchSuite::kTriangleScaling:
      for (std::uint32_t q : {11u, 23u, 47u}) {
        const Graph g = polarity_graph(q);
        rows.push_back(describe("polarity-q" + std::to_string(q), g, "triangle",
                                list_triangles(g, discard<TriangleRecord>())));
      }
      break;
    case BenchSuite::kC4Delay:
      for (std::size_t t : {1000u, 10000u, 100000u}) {
        const Graph g = k22_blocks(t);
        rows.push_back(describe("k22-blocks-t" + std::to_string(t), g, "c4",
                                list_4cycles(g, discard<FourCycleRecord>())));
      }
      break;
    case BenchSuite::kCliqueScaling:
      for (std::size_t n : {100u, 200u, 400u}) {
        const auto m = static_cast<std::size_t>(std::llround(0.3 * double(n) * double(n - 1) / 2.0));
        const Graph g = random_gnm(n, m, 17 + n);
        rows.push_back(describe("gnm-n" + std::to_string(n) + "-m" + std::to_string(m), g, "k4-clique",
                                list_kcliques(g, 4, discard<CliqueRecord>())));
      }
      break;
    case BenchSuite::kZeroClique:
      for (std::size_t part : {16u, 32u, 64u}) {
        const auto wg = random_weighted_kpartite(3, part, 1.0, 1000, false, 29 + part);
        const SolveReport rep = solve_zero_kclique(wg, 3, 4, 31 + part);
        BenchRecord r;
        r.gen = "complete3partite-p" + std::to_string(part) + "-s4";
        r.n = wg.base.num_vertices();
        r.m = wg.base.num_edges();
        r.alpha_proxy = degeneracy_ordering(wg.base).degeneracy;
        r.algo = "zero-3-clique";
        r.pre_s = rep.hash_seconds + rep.partition_seconds;
        r.emit_s = rep.search_seconds;
        r.count = rep.cliques_listed_total;
        r.steps = rep.buckets_examined;
        rows.push_back(std::move(r));
      }
      break;
  }
  return rows;
}

double normalized_work(const BenchRecord& r, unsigned k) {
  const double alpha = std::pow(static_cast<double>(r.alpha_proxy), static_cast<double>(k) - 2.0);
  return static_cast<double>(r.steps) / (static_cast<double>(r.m) * alpha);
}

std::string to_csv_row(const BenchRecord& r) {
  return r.gen + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.alpha_proxy) + ',' +
         r.algo + ',' + shortest(r.pre_s) + ',' + shortest(r.emit_s) + ',' + std::to_string(r.count) + ',' +
         std::to_string(r.steps);
}

BenchRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (std::count(line.begin(), line.end(), ',') != 8) {
    throw Error(ErrorCode::kParse, "expected 9 CSV fields in '" + std::string(line) + "'");
  }
  BenchRecord r;
  r.gen = field(line);
  r.n = number<std::uint64_t>(field(line));
  r.m = number<std::uint64_t>(field(line));
  r.alpha_proxy = number<std::uint64_t>(field(line));
  r.algo = field(line);
  r.pre_s = number<double>(field(line));
  r.emit_s = number<double>(field(line));
  r.count = number<std::uint64_t>(field(line));
  r.steps = number<std::uint64_t>(field(line));
  return r;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows, bool with_header) {
  if (with_header) out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || std::string_view(line).substr(0, kBenchCsvHeader.size()) != kBenchCsvHeader) {
    throw Error(ErrorCode::kParse, "missing CSV header");
  }
  std::vector<BenchRecord> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(parse_csv_row(line));
  }
  return rows;
}

std::vector<BucketDegreeSample> sample_bucket_degrees(std::uint32_t k, std::size_t part_size, std::uint64_t s,
                                                      std::size_t buckets, std::int64_t weight_bound,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto wg = random_weighted_kpartite(k, part_size, 1.0, weight_bound, false, rng());
  const auto [hashed, params] = hash_weights(wg, choose_modulus(wg), rng());
  const IntervalPartition part = partition_intervals(params.p, s);
  const std::vector<BucketKey> keys = admissible_tuples(part, k);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);

  std::vector<BucketDegreeSample> out;
  for (std::size_t i = 0; i < buckets; ++i) {
    const Graph bucket = extract_bucket(wg, hashed, keys[pick(rng)], part);
    out.push_back({bucket_degree_stats(bucket).mean_degree,
                   static_cast<double>(part_size) / static_cast<double>(part.s)});
  }
  return out;
}

}  // namespace arbo
