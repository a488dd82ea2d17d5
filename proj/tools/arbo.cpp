// arbo: generate graphs, list triangles / 4-cycles / k-cliques, check the
// listers against brute force, solve zero-weight k-clique, run benchmarks.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arbo/bench.hpp"
#include "arbo/error.hpp"
#include "arbo/generators.hpp"
#include "arbo/io.hpp"
#include "arbo/listing.hpp"
#include "arbo/verify.hpp"
#include "arbo/zeroclique.hpp"

namespace {

using namespace arbo;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct GenOptions {
  std::string name;
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t seed = 1;
  std::uint32_t k = 3;
  std::size_t part_size = 8;
  double density = 0.5;
  double n_param = 1e4;
  double sigma = 0.25;
  std::size_t copies = 1;
  std::int64_t weight_bound = 50;
  bool plant = false;
  std::string input;
  std::optional<std::string> labels;
  std::optional<std::string> out;
};

struct ListOptions {
  std::string input;
  std::string kind = "triangle";
  std::uint32_t k = 3;
  std::optional<std::string> labels;
  bool count_only = false;
  bool inject_drop = false;
};

struct SolveOptionsCli {
  std::string input;
  std::optional<std::string> labels;
  std::uint32_t k = 3;
  std::optional<std::uint64_t> s;
  std::uint64_t seed = 1;
  std::optional<double> epsilon;
  unsigned threads = 1;
  std::optional<std::int64_t> weight_bound;
};

struct BenchOptions {
  std::string suite;
  std::optional<std::string> out;
};

std::string describe_params(const GenOptions& o) {
  std::ostringstream s;
  if (o.name == "polarity") s << "q=" << o.q;
  else if (o.name == "gnm") s << "n=" << o.n << " m=" << o.m << " seed=" << o.seed;
  else if (o.name == "complete") s << "n=" << o.n;
  else if (o.name == "complete-bipartite") s << "a=" << o.a << " b=" << o.b;
  else if (o.name == "kpartite") s << "k=" << o.k << " part_size=" << o.part_size << " density=" << o.density << " seed=" << o.seed;
  else if (o.name == "color-code") s << "input=" << o.input << " k=" << o.k << " seed=" << o.seed;
  else if (o.name == "transform") s << "input=" << o.input;
  else if (o.name == "pad") s << "input=" << o.input << " copies=" << o.copies << " q=" << o.q;
  else if (o.name == "sparse-triangle") s << "n=" << o.n_param << " sigma=" << o.sigma << " seed=" << o.seed;
  else if (o.name == "zero-clique")
    s << "k=" << o.k << " part_size=" << o.part_size << " density=" << o.density << " weight_bound=" << o.weight_bound
      << " plant=" << (o.plant ? 1 : 0) << " seed=" << o.seed;
  return s.str();
}

int run_gen(const GenOptions& o) {
  Graph g;
  std::optional<std::vector<std::int64_t>> weights;
  if (o.name == "polarity") g = polarity_graph(o.q);
  else if (o.name == "gnm") g = random_gnm(o.n, o.m, o.seed);
  else if (o.name == "complete") g = complete_graph(o.n);
  else if (o.name == "complete-bipartite") g = complete_bipartite(o.a, o.b);
  else if (o.name == "kpartite") g = random_kpartite(o.k, o.part_size, o.density, o.seed);
  else if (o.name == "color-code") g = color_code(io::load_graph(o.input, o.labels), o.k, o.seed);
  else if (o.name == "transform") g = triangle_to_4cycle_transform(io::load_graph(o.input, o.labels)).graph;
  else if (o.name == "pad") g = pad_with_c4free(io::load_graph(o.input, o.labels), o.copies, o.q);
  else if (o.name == "sparse-triangle") g = sparse_triangle_instance(o.n_param, o.sigma, o.seed);
  else if (o.name == "zero-clique") {
    auto wg = random_weighted_kpartite(o.k, o.part_size, o.density, o.weight_bound, o.plant, o.seed);
    g = wg.base;
    weights = std::move(wg.weights);
  } else {
    std::cerr << "error: unknown generator '" << o.name
              << "' (polarity, gnm, complete, complete-bipartite, kpartite, color-code, transform, pad, "
                 "sparse-triangle, zero-clique)\n";
    return kExitUsage;
  }

  const std::vector<std::string> meta{"generator=" + o.name, "params " + describe_params(o)};
  if (!o.out) {
    if (g.has_part_labels()) {
      std::cerr << "error: generator '" << o.name << "' produces part labels; pass --out\n";
      return kExitUsage;
    }
    io::write_edge_list(std::cout, g, meta, weights ? &*weights : nullptr);
    return 0;
  }
  std::ofstream out(*o.out);
  if (!out) throw Error(ErrorCode::kBadArgument, "cannot write '" + *o.out + "'");
  io::write_edge_list(out, g, meta, weights ? &*weights : nullptr);
  if (g.has_part_labels()) {
    std::ofstream lab(io::default_labels_path(*o.out));
    io::write_labels(lab, g);
  }
  return 0;
}

void print_stats(const EnumerationStats& st) {
  std::cout << "STATS pre=" << st.preprocess_seconds << " emit=" << st.emit_seconds << " count=" << st.emitted
            << " steps=" << (st.steps + st.emit_steps) << '\n';
}

int run_list(const ListOptions& o) {
  const Graph g = io::load_graph(o.input, o.labels);
  const ListKind kind = parse_list_kind(o.kind);
  if (o.count_only) {
    std::uint64_t c = 0;
    switch (kind) {
      case ListKind::kTriangle: c = count_triangles(g); break;
      case ListKind::kFourCycle: c = count_4cycles(g); break;
      case ListKind::kClique: c = count_kcliques(g, o.k); break;
    }
    std::cout << "COUNT " << to_string(kind) << ' ' << c << '\n';
    return 0;
  }
  auto print = [](const auto& rec) {
    std::cout << io::format_record(rec) << '\n';
    return Flow::kContinue;
  };
  EnumerationStats st;
  switch (kind) {
    case ListKind::kTriangle: st = list_triangles(g, print); break;
    case ListKind::kFourCycle: st = list_4cycles(g, print); break;
    case ListKind::kClique: st = list_kcliques(g, o.k, print); break;
  }
  print_stats(st);
  return 0;
}

int run_verify(const ListOptions& o) {
  const Graph g = io::load_graph(o.input, o.labels);
  const ListKind kind = parse_list_kind(o.kind);
  const VerifyReport r = verify_against_oracle(g, kind, o.k, VerifyOptions{o.inject_drop});
  std::cout << "VERIFY " << to_string(kind) << ' ' << (r.equal ? "PASS" : "FAIL") << " fast=" << r.fast_count
            << " oracle=" << r.oracle_count << " missing=" << r.missing << " extra=" << r.extra
            << " duplicates=" << r.duplicates << '\n';
  for (const auto& e : r.examples) std::cout << "  " << e << '\n';
  return r.equal ? 0 : kExitMismatch;
}

int run_solve(const SolveOptionsCli& o) {
  const WeightedKPartiteGraph wg = io::load_weighted(o.input, o.labels, o.k, o.weight_bound);
  std::uint64_t s = 1;
  if (o.s) s = *o.s;
  else if (o.epsilon) s = choose_s(std::max<std::uint64_t>(2, wg.largest_part()), o.k, *o.epsilon);

  SolveOptions opts;
  opts.threads = o.threads;
  const SolveReport r = solve_zero_kclique(wg, o.k, s, o.seed, opts);
  std::cout << "found=" << (r.found ? "true" : "false") << '\n'
            << "k=" << o.k << '\n'
            << "p=" << r.p << '\n'
            << "x=" << r.x << '\n'
            << "s=" << r.s << '\n'
            << "admissible_keys=" << r.admissible_keys << '\n'
            << "buckets_examined=" << r.buckets_examined << '\n'
            << "cliques_listed_total=" << r.cliques_listed_total << '\n'
            << "max_bucket_cliques=" << r.max_bucket_cliques << '\n'
            << "hash_s=" << r.hash_seconds << '\n'
            << "partition_s=" << r.partition_seconds << '\n'
            << "search_s=" << r.search_seconds << '\n';
  if (r.found) {
    std::cout << "ZK";
    for (Vertex v : r.found->clique.v) std::cout << ' ' << v;
    std::cout << " sum=" << r.found->sum << '\n';
  }
  return 0;
}

int run_bench(const BenchOptions& o) {
  const BenchSuite suite = parse_bench_suite(o.suite);
  const std::vector<BenchRecord> rows = run_bench_suite(suite);
  const unsigned k = suite == BenchSuite::kCliqueScaling ? 4 : 3;
  if (!o.out) {
    write_csv(std::cout, rows, true);
    return 0;
  }
  const bool fresh = !std::filesystem::exists(*o.out) || std::filesystem::file_size(*o.out) == 0;
  std::ofstream out(*o.out, std::ios::app);
  if (!out) throw Error(ErrorCode::kBadArgument, "cannot write '" + *o.out + "'");
  write_csv(out, rows, fresh);
  for (const auto& r : rows) {
    std::cout << r.gen << ' ' << r.algo << " count=" << r.count << " steps=" << r.steps
              << " steps/(m*alpha^" << (k - 2) << ")=" << normalized_work(r, k);
    if (r.count > 0) std::cout << " emit_s/count=" << r.emit_s / static_cast<double>(r.count);
    std::cout << '\n';
  }
  if (suite == BenchSuite::kZeroClique) {
    for (const auto& b : sample_bucket_degrees(3, 64, 4, 20, 1000, 7)) {
      std::cout << "bucket mean_degree=" << b.mean_degree << " part_size/s=" << b.expected << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arboricity-parameterized subgraph listing and zero-weight clique search"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Write a generated graph as an edge list");
  g->add_option("generator", gen.name, "polarity, gnm, complete, complete-bipartite, kpartite, color-code, "
                                       "transform, pad, sparse-triangle, zero-clique")
      ->required();
  g->add_option("--q", gen.q, "Prime field size (polarity, pad)");
  g->add_option("--n", gen.n, "Vertex count (gnm, complete)");
  g->add_option("--m", gen.m, "Edge count (gnm)");
  g->add_option("--a", gen.a, "Left side (complete-bipartite)");
  g->add_option("--b", gen.b, "Right side (complete-bipartite)");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--k", gen.k, "Number of parts");
  g->add_option("--part-size", gen.part_size, "Vertices per part");
  g->add_option("--density", gen.density, "Edge probability between parts");
  g->add_option("--n-param", gen.n_param, "Size parameter n (sparse-triangle)");
  g->add_option("--sigma", gen.sigma, "Exponent sigma in (0, 0.5) (sparse-triangle)");
  g->add_option("--copies", gen.copies, "Padding copies (pad)");
  g->add_option("--weight-bound", gen.weight_bound, "Weights drawn from [-W, W] (zero-clique)");
  g->add_flag("--plant", gen.plant, "Plant a zero-weight clique (zero-clique)");
  g->add_option("--input", gen.input, "Input edge list (color-code, transform, pad)");
  g->add_option("--labels", gen.labels, "Part labels for --input");
  g->add_option("--out", gen.out, "Output path; labels go to <out>.labels");

  ListOptions list;
  auto* l = app.add_subcommand("list", "Stream triangles, 4-cycles or k-cliques");
  l->add_option("input", list.input)->required();
  l->add_option("--kind", list.kind, "triangle, c4 or clique");
  l->add_option("--k", list.k, "Clique size");
  l->add_option("--labels", list.labels, "Part labels file");
  l->add_flag("--count", list.count_only, "Print only COUNT <kind> <value>");

  ListOptions verify;
  auto* v = app.add_subcommand("verify", "Compare a lister against the brute-force oracle");
  v->add_option("input", verify.input)->required();
  v->add_option("--kind", verify.kind, "triangle, c4 or clique");
  v->add_option("--k", verify.k, "Clique size");
  v->add_option("--labels", verify.labels, "Part labels file");
  v->add_flag("--inject-drop", verify.inject_drop, "Drop the lister's first record (harness self-test)");

  SolveOptionsCli solve;
  auto* s = app.add_subcommand("solve-zero-clique", "Search a weighted k-partite graph for a zero-weight k-clique");
  s->add_option("input", solve.input)->required();
  s->add_option("--labels", solve.labels, "Part labels file");
  s->add_option("--k", solve.k, "Clique size (= number of parts)");
  s->add_option("--s", solve.s, "Interval count; defaults to the epsilon rule, else 1");
  s->add_option("--seed", solve.seed, "Hash seed");
  s->add_option("--epsilon", solve.epsilon, "Choose s = round(n^(2 eps / (k^2 - 3k + 2)))");
  s->add_option("--threads", solve.threads, "Bucket workers");
  s->add_option("--weight-bound", solve.weight_bound, "Weight bound W (default: largest |w|)");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Run a scaling suite and emit CSV");
  b->add_option("suite", bench.suite, "triangle-scaling, c4-delay, clique-scaling, zeroclique")->required();
  b->add_option("--out", bench.out, "Append rows to this CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*l) return run_list(list);
    if (*v) return run_verify(verify);
    if (*s) return run_solve(solve);
    if (*b) return run_bench(bench);
  } catch (const arbo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
