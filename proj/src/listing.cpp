#include "arbo/listing.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "arbo/error.hpp"

namespace arbo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// Tracks the emit phase: counts records, measures the widest gap between
// consecutive records and forwards the sink's stop signal.
template <typename Record>
class Emitter {
 public:
  Emitter(const Sink<Record>& sink, EnumerationStats& stats)
      : sink_(sink), stats_(stats), last_(Clock::now()) {}

  bool operator()(const Record& r) {
    const auto now = Clock::now();
    stats_.max_gap_seconds = std::max(stats_.max_gap_seconds, seconds_between(last_, now));
    last_ = now;
    ++stats_.emitted;
    if (sink_(r) == Flow::kStop) {
      stats_.stopped = true;
      return false;
    }
    return true;
  }

 private:
  const Sink<Record>& sink_;
  EnumerationStats& stats_;
  Clock::time_point last_;
};

// Neighbors later in the ordering, each list sorted by vertex id.
struct ForwardAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;

  std::span<const Vertex> operator[](Vertex v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

ForwardAdjacency orient(const Graph& g, const std::vector<std::uint32_t>& position) {
  ForwardAdjacency fwd;
  const std::size_t n = g.num_vertices();
  fwd.offsets.assign(n + 1, 0);
  fwd.targets.reserve(g.num_edges());
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      if (position[u] > position[v]) fwd.targets.push_back(u);
    }
    fwd.offsets[v + 1] = fwd.targets.size();
  }
  return fwd;
}

}  // namespace

TriangleRecord canonical_triangle(Vertex a, Vertex b, Vertex c) {
  TriangleRecord r{{a, b, c}};
  std::sort(r.v.begin(), r.v.end());
  return r;
}

FourCycleRecord canonical_four_cycle(Vertex a, Vertex b, Vertex c, Vertex d) {
  std::array<Vertex, 4> cyc{a, b, c, d};
  const auto lo = static_cast<std::size_t>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  FourCycleRecord r{{cyc[lo], cyc[(lo + 1) % 4], cyc[(lo + 2) % 4], cyc[(lo + 3) % 4]}};
  if (r.v[1] > r.v[3]) std::swap(r.v[1], r.v[3]);
  return r;
}

EnumerationStats list_triangles(const Graph& g, const Sink<TriangleRecord>& sink) {
  EnumerationStats stats;
  const auto t0 = Clock::now();
  const OrderingResult ord = degeneracy_ordering(g);
  const ForwardAdjacency fwd = orient(g, ord.position);
  std::vector<bool> marked(g.num_vertices(), false);
  const auto t1 = Clock::now();
  stats.preprocess_seconds = seconds_between(t0, t1);

  Emitter<TriangleRecord> emit(sink, stats);
  for (Vertex v : ord.order) {
    const auto live = fwd[v];
    for (Vertex u : live) marked[u] = true;
    stats.steps += live.size();
    bool go = true;
    for (Vertex u : live) {
      const auto later = fwd[u];
      stats.steps += later.size();
      for (Vertex w : later) {
        if (marked[w] && !(go = emit(canonical_triangle(v, u, w)))) break;
      }
      if (!go) break;
    }
    for (Vertex u : live) marked[u] = false;
    if (!go) break;
  }
  stats.emit_seconds = seconds_between(t1, Clock::now());
  return stats;
}

std::vector<bool> all_edge_sparse_triangle(const Graph& g) {
  std::vector<bool> in_triangle(g.num_edges(), false);
  list_triangles(g, [&](const TriangleRecord& t) {
    in_triangle[*g.edge_id(t.v[0], t.v[1])] = true;
    in_triangle[*g.edge_id(t.v[0], t.v[2])] = true;
    in_triangle[*g.edge_id(t.v[1], t.v[2])] = true;
    return Flow::kContinue;
  });
  return in_triangle;
}

EnumerationStats list_4cycles(const Graph& g, const Sink<FourCycleRecord>& sink) {
  EnumerationStats stats;
  const std::size_t n = g.num_vertices();
  const auto t0 = Clock::now();

  const std::vector<Vertex> order = degree_order(g);
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i);

  // A group is (v, w) plus the middles u with v-u-w a path through vertices
  // ranked after v; its middles occupy middles[begin, end).
  struct Group {
    Vertex v;
    Vertex w;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Group> groups;
  std::vector<Vertex> middles;
  std::vector<std::vector<Vertex>> through(n);
  std::vector<Vertex> touched;

  for (Vertex v : order) {
    touched.clear();
    for (Vertex u : g.neighbors(v)) {
      if (rank[u] <= rank[v]) continue;
      const auto nbrs = g.neighbors(u);
      stats.steps += nbrs.size();
      for (Vertex w : nbrs) {
        if (rank[w] <= rank[v]) continue;
        if (through[w].empty()) touched.push_back(w);
        through[w].push_back(u);
      }
    }
    for (Vertex w : touched) {
      auto& us = through[w];
      if (us.size() >= 2) {
        groups.push_back({v, w, middles.size(), middles.size() + us.size()});
        middles.insert(middles.end(), us.begin(), us.end());
      }
      stats.steps += us.size();
      us.clear();
    }
  }
  const auto t1 = Clock::now();
  stats.preprocess_seconds = seconds_between(t0, t1);

  Emitter<FourCycleRecord> emit(sink, stats);
  for (const Group& grp : groups) {
    ++stats.emit_steps;
    for (std::size_t i = grp.begin; i < grp.end; ++i) {
      for (std::size_t j = i + 1; j < grp.end; ++j) {
        ++stats.emit_steps;
        if (!emit(canonical_four_cycle(grp.v, middles[i], grp.w, middles[j]))) {
          stats.emit_seconds = seconds_between(t1, Clock::now());
          return stats;
        }
      }
    }
  }
  stats.emit_seconds = seconds_between(t1, Clock::now());
  return stats;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const ForwardAdjacency& fwd, std::uint32_t k, Emitter<CliqueRecord>& emit,
               EnumerationStats& stats)
      : fwd_(fwd), emit_(emit), stats_(stats), levels_(k) {
    prefix_.reserve(k);
  }

  // Extends prefix_ by `need` vertices drawn from `cand`, which holds the
  // common later neighbors of the prefix. Returns false once the sink stops.
  bool extend(std::span<const Vertex> cand, std::uint32_t need) {
    if (need == 1) {
      stats_.steps += cand.size();
      for (Vertex u : cand) {
        CliqueRecord rec{prefix_};
        rec.v.push_back(u);
        std::sort(rec.v.begin(), rec.v.end());
        if (!emit_(rec)) return false;
      }
      return true;
    }
    auto& next = levels_[need];
    for (Vertex u : cand) {
      const auto later = fwd_[u];
      stats_.steps += later.size() + cand.size();
      next.clear();
      std::set_intersection(cand.begin(), cand.end(), later.begin(), later.end(),
                            std::back_inserter(next));
      if (next.size() < need - 1) continue;
      prefix_.push_back(u);
      const bool go = extend(next, need - 1);
      prefix_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  bool run(Vertex v, std::uint32_t k) {
    prefix_.assign(1, v);
    const auto cand = fwd_[v];
    stats_.steps += 1;
    if (cand.size() < k - 1) return true;
    return extend(cand, k - 1);
  }

 private:
  const ForwardAdjacency& fwd_;
  Emitter<CliqueRecord>& emit_;
  EnumerationStats& stats_;
  std::vector<std::vector<Vertex>> levels_;
  std::vector<Vertex> prefix_;
};

}  // namespace

EnumerationStats list_kcliques(const Graph& g, std::uint32_t k, const Sink<CliqueRecord>& sink) {
  if (k < 2) throw Error(ErrorCode::kKTooSmall, "k=" + std::to_string(k));
  EnumerationStats stats;
  const auto t0 = Clock::now();
  if (k == 2) {
    const auto t1 = Clock::now();
    stats.preprocess_seconds = seconds_between(t0, t1);
    Emitter<CliqueRecord> emit(sink, stats);
    for (const Edge& e : g.edges()) {
      ++stats.steps;
      if (!emit(CliqueRecord{{e.u, e.v}})) break;
    }
    stats.emit_seconds = seconds_between(t1, Clock::now());
    return stats;
  }

  const OrderingResult ord = degeneracy_ordering(g);
  const ForwardAdjacency fwd = orient(g, ord.position);
  const auto t1 = Clock::now();
  stats.preprocess_seconds = seconds_between(t0, t1);

  Emitter<CliqueRecord> emit(sink, stats);
  CliqueSearch search(fwd, k, emit, stats);
  for (Vertex v : ord.order) {
    if (!search.run(v, k)) break;
  }
  stats.emit_seconds = seconds_between(t1, Clock::now());
  return stats;
}

std::uint64_t count_triangles(const Graph& g) {
  return list_triangles(g, [](const TriangleRecord&) { return Flow::kContinue; }).emitted;
}

std::uint64_t count_4cycles(const Graph& g) {
  return list_4cycles(g, [](const FourCycleRecord&) { return Flow::kContinue; }).emitted;
}

std::uint64_t count_kcliques(const Graph& g, std::uint32_t k) {
  return list_kcliques(g, k, [](const CliqueRecord&) { return Flow::kContinue; }).emitted;
}

}  // namespace arbo
