#include "arbo/verify.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "arbo/error.hpp"
#include "arbo/io.hpp"
#include "arbo/listing.hpp"
#include "arbo/oracle.hpp"

namespace arbo {

namespace {

constexpr std::size_t kMaxExamples = 5;

template <typename Record, typename Lister>
VerifyReport compare(const std::set<Record>& expected, Lister&& list, const VerifyOptions& options) {
  VerifyReport report;
  std::set<Record> got;
  bool dropped = false;
  list([&](const Record& r) {
    if (options.drop_first_record && !dropped) {
      dropped = true;
      return Flow::kContinue;
    }
    ++report.fast_count;
    if (!got.insert(r).second) ++report.duplicates;
    return Flow::kContinue;
  });
  report.oracle_count = expected.size();

  std::vector<Record> missing, extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  report.missing = missing.size();
  report.extra = extra.size();
  for (std::size_t i = 0; i < missing.size() && report.examples.size() < kMaxExamples; ++i)
    report.examples.push_back("missing " + io::format_record(missing[i]));
  for (std::size_t i = 0; i < extra.size() && report.examples.size() < kMaxExamples; ++i)
    report.examples.push_back("extra " + io::format_record(extra[i]));
  report.equal = report.missing == 0 && report.extra == 0 && report.duplicates == 0;
  return report;
}

}  // namespace

ListKind parse_list_kind(std::string_view name) {
  if (name == "triangle") return ListKind::kTriangle;
  if (name == "c4") return ListKind::kFourCycle;
  if (name == "clique") return ListKind::kClique;
  throw Error(ErrorCode::kBadArgument, "unknown kind '" + std::string(name) + "' (triangle, c4, clique)");
}

std::string_view to_string(ListKind kind) {
  switch (kind) {
    case ListKind::kTriangle: return "triangle";
    case ListKind::kFourCycle: return "c4";
    case ListKind::kClique: return "clique";
  }
  return "?";
}

VerifyReport verify_against_oracle(const Graph& g, ListKind kind, std::uint32_t k, const VerifyOptions& options) {
  switch (kind) {
    case ListKind::kTriangle:
      return compare(oracle::brute_triangles(g), [&](auto sink) { list_triangles(g, sink); }, options);
    case ListKind::kFourCycle:
      return compare(oracle::brute_4cycles(g), [&](auto sink) { list_4cycles(g, sink); }, options);
    case ListKind::kClique:
      if (k < 2) throw Error(ErrorCode::kKTooSmall, "k=" + std::to_string(k));
      return compare(oracle::brute_kcliques(g, k), [&](auto sink) { list_kcliques(g, k, sink); }, options);
  }
  return {};
}

}  // namespace arbo
