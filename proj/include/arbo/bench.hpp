#ifndef ARBO_BENCH_HPP
#define ARBO_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace arbo {

inline constexpr std::string_view kBenchCsvHeader = "gen,n,m,alpha_proxy,algo,pre_s,emit_s,count,steps";

struct BenchRecord {
  std::string gen;  // generator and parameters, e.g. "polarity-q11"
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t alpha_proxy = 0;  // degeneracy
  std::string algo;
  double pre_s = 0.0;
  double emit_s = 0.0;
  std::uint64_t count = 0;
  std::uint64_t steps = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

enum class BenchSuite { kTriangleScaling, kC4Delay, kCliqueScaling, kZeroClique };

BenchSuite parse_bench_suite(std::string_view name);
std::string_view to_string(BenchSuite suite);

// Each suite sweeps at least three geometrically spaced sizes:
//   triangle-scaling  polarity graphs q = 11, 23, 47
//   c4-delay          disjoint unions of t K_{2,2} blocks, t = 10^3, 10^4, 10^5
//   clique-scaling    k = 4 on G(n, 0.3 C(n,2)), n = 100, 200, 400
//   zeroclique        k = 3 complete tripartite, 16, 32, 64 per part, s = 4
std::vector<BenchRecord> run_bench_suite(BenchSuite suite);

// steps / (m * alpha^(k-2)); k is 3 for triangles and 4-cycles.
double normalized_work(const BenchRecord& r, unsigned k);

// Rows round-trip exactly: doubles are written in shortest form.
std::string to_csv_row(const BenchRecord& r);
BenchRecord parse_csv_row(std::string_view line);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows, bool with_header);
// Expects the header line first.
std::vector<BenchRecord> read_csv(std::istream& in);

struct BucketDegreeSample {
  double mean_degree = 0.0;
  double expected = 0.0;  // part_size / s
};

// Hashes a complete k-partite instance with random weights in
// [-weight_bound, weight_bound] and measures `buckets` admissible buckets
// chosen at random.
std::vector<BucketDegreeSample> sample_bucket_degrees(std::uint32_t k, std::size_t part_size, std::uint64_t s,
                                                      std::size_t buckets, std::int64_t weight_bound,
                                                      std::uint64_t seed);

}  // namespace arbo

#endif  // ARBO_BENCH_HPP
