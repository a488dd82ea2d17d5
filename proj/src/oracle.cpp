#include "arbo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arbo/error.hpp"
#include "arbo/zeroclique.hpp"

namespace arbo::oracle {

namespace {

class DenseAdjacency {
 public:
  explicit DenseAdjacency(const Graph& g) : n_(g.num_vertices()), bits_(n_ * n_, false) {
    for (const Edge& e : g.edges()) {
      bits_[e.u * n_ + e.v] = true;
      bits_[e.v * n_ + e.u] = true;
    }
  }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

void guard(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kTooLarge, what);
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace

std::set<TriangleRecord> brute_triangles(const Graph& g) {
  const std::size_t n = g.num_vertices();
  guard(n <= kMaxTriangleVertices, "triangle oracle limited to n<=512, got n=" + std::to_string(n));
  const DenseAdjacency adj(g);
  std::set<TriangleRecord> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (adj(a, b) && adj(b, c) && adj(a, c))
          out.insert(canonical_triangle(Vertex(a), Vertex(b), Vertex(c)));
  return out;
}

std::set<FourCycleRecord> brute_4cycles(const Graph& g) {
  const std::size_t n = g.num_vertices();
  guard(n <= kMaxFourCycleVertices, "4-cycle oracle limited to n<=256, got n=" + std::to_string(n));
  const DenseAdjacency adj(g);
  auto cycle = [&](std::size_t w, std::size_t x, std::size_t y, std::size_t z) {
    return adj(w, x) && adj(x, y) && adj(y, z) && adj(z, w);
  };
  std::set<FourCycleRecord> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          // The three distinct cyclic arrangements of four vertices.
          if (cycle(a, b, c, d)) out.insert(canonical_four_cycle(Vertex(a), Vertex(b), Vertex(c), Vertex(d)));
          if (cycle(a, b, d, c)) out.insert(canonical_four_cycle(Vertex(a), Vertex(b), Vertex(d), Vertex(c)));
          if (cycle(a, c, b, d)) out.insert(canonical_four_cycle(Vertex(a), Vertex(c), Vertex(b), Vertex(d)));
        }
  return out;
}

std::set<CliqueRecord> brute_kcliques(const Graph& g, std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  guard(binomial(n, k) <= kMaxCliqueSubsets,
        "clique oracle limited to C(n,k)<=1e8, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  const DenseAdjacency adj(g);
  std::set<CliqueRecord> out;
  if (k == 0) return out;
  std::vector<Vertex> chosen;
  // Walks k-subsets in lexicographic order, abandoning a prefix as soon as it
  // is not pairwise adjacent.
  auto walk = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == k) {
      out.insert(CliqueRecord{chosen});
      return;
    }
    for (std::size_t v = from; v + (k - chosen.size()) <= n; ++v) {
      bool ok = true;
      for (Vertex c : chosen) ok = ok && adj(c, v);
      if (!ok) continue;
      chosen.push_back(Vertex(v));
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

std::optional<CliqueRecord> brute_zero_kclique(const WeightedKPartiteGraph& wg) {
  const Graph& g = wg.base;
  const std::uint32_t k = wg.k;
  if (!g.has_part_labels()) throw Error(ErrorCode::kMissingLabels, "weighted graph has no part labels");
  std::vector<std::vector<Vertex>> parts(k);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) parts.at(g.part_of(Vertex(v))).push_back(Vertex(v));
  for (const auto& p : parts) {
    guard(p.size() <= kMaxZeroCliquePart,
          "zero-clique oracle limited to parts of size <=16, got " + std::to_string(p.size()));
    if (p.empty()) return std::nullopt;
  }

  std::vector<std::size_t> pick(k, 0);
  while (true) {
    bool clique = true;
    std::int64_t sum = 0;
    for (std::uint32_t i = 0; i < k && clique; ++i) {
      for (std::uint32_t j = i + 1; j < k && clique; ++j) {
        const auto e = g.edge_id(parts[i][pick[i]], parts[j][pick[j]]);
        if (!e) clique = false;
        else sum += wg.weights[*e];
      }
    }
    if (clique && sum == 0) {
      CliqueRecord r;
      for (std::uint32_t i = 0; i < k; ++i) r.v.push_back(parts[i][pick[i]]);
      std::sort(r.v.begin(), r.v.end());
      return r;
    }
    // Odometer over one vertex per part, last part fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pick[i] < parts[i].size()) break;
      pick[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace arbo::oracle
