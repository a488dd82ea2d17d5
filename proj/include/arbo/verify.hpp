#ifndef ARBO_VERIFY_HPP
#define ARBO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arbo/graph.hpp"

namespace arbo {

enum class ListKind { kTriangle, kFourCycle, kClique };

// "triangle", "c4" or "clique"; throws BadArgument otherwise.
ListKind parse_list_kind(std::string_view name);
std::string_view to_string(ListKind kind);

struct VerifyReport {
  bool equal = false;
  std::uint64_t fast_count = 0;
  std::uint64_t oracle_count = 0;
  std::uint64_t missing = 0;  // in the oracle set, not produced by the lister
  std::uint64_t extra = 0;    // produced by the lister, not in the oracle set
  std::uint64_t duplicates = 0;
  std::vector<std::string> examples;  // a few differing records, formatted
};

struct VerifyOptions {
  // Fault injection for harness self-tests: discard the lister's first record.
  bool drop_first_record = false;
};

// Compares the fast lister's record set with the oracle's. Oracle guards
// propagate as TooLarge.
VerifyReport verify_against_oracle(const Graph& g, ListKind kind, std::uint32_t k = 3,
                                   const VerifyOptions& options = {});

}  // namespace arbo

#endif  // ARBO_VERIFY_HPP
