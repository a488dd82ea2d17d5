#ifndef ARBO_ORACLE_HPP
#define ARBO_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "arbo/graph.hpp"
#include "arbo/listing.hpp"

namespace arbo {

struct WeightedKPartiteGraph;

// Deliberately naive reference enumerations. They share nothing with the
// listers except the canonical record helpers, and throw TooLarge past their
// size guards.
namespace oracle {

inline constexpr std::size_t kMaxTriangleVertices = 512;
inline constexpr std::size_t kMaxFourCycleVertices = 256;
inline constexpr double kMaxCliqueSubsets = 1e8;
inline constexpr std::size_t kMaxZeroCliquePart = 16;

std::set<TriangleRecord> brute_triangles(const Graph& g);
std::set<FourCycleRecord> brute_4cycles(const Graph& g);
std::set<CliqueRecord> brute_kcliques(const Graph& g, std::uint32_t k);

// First zero-sum clique (one vertex per part, original weights) in
// lexicographic order of the per-part choice.
std::optional<CliqueRecord> brute_zero_kclique(const WeightedKPartiteGraph& g);

}  // namespace oracle
}  // namespace arbo

#endif  // ARBO_ORACLE_HPP
