#include "mcsum/mce.hpp"

#include <algorithm>
#include <chrono>

namespace mcsum {

namespace {

// Pivot selection over raw sorted sequences; scans T then D in ascending id
// so the strict comparison keeps the smallest id among score ties.
VertexId pivot_from(const Graph& g, std::span<const VertexId> t,
                    std::span<const VertexId> d) {
  VertexId best = 0;
  std::size_t best_score = 0;
  bool have = false;
  auto consider = [&](VertexId v) {
    const std::size_t score = intersection_size(t, g.neighbors(v));
    if (!have || score > best_score || (score == best_score && v < best)) {
      best = v;
      best_score = score;
      have = true;
    }
  };
  for (const VertexId v : t) consider(v);
  for (const VertexId v : d) consider(v);
  if (!have) {
    throw std::invalid_argument("choose_pivot: both candidate sets empty");
  }
  return best;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::vector<VertexId>& to_input,
             const CliqueSink& sink, RunStats& stats)
      : g_(g), to_input_(to_input), sink_(sink), stats_(stats) {}

  void run() {
    const VertexId n = g_.vertex_count();
    if (n == 0) return;
    std::vector<VertexId> t(n);
    for (VertexId v = 0; v < n; ++v) t[v] = v;
    expand(t, {});
  }

 private:
  void emit() {
    std::vector<VertexId> members(clique_.size());
    for (std::size_t i = 0; i < clique_.size(); ++i) {
      members[i] = to_input_[clique_[i]];
    }
    std::sort(members.begin(), members.end());
    sink_(Clique{VertexSet::from_sorted(std::move(members))},
          stats_.cliques_completed);
    ++stats_.cliques_completed;
  }

  void expand(std::vector<VertexId> t, std::vector<VertexId> d) {
    ++depth_;
    stats_.peak_frames = std::max(stats_.peak_frames, depth_);
    if (t.empty() && d.empty()) {
      emit();
      --depth_;
      return;
    }
    const VertexId pivot = pivot_from(g_, t, d);
    const std::vector<VertexId> expand_order =
        difference_sorted(t, g_.neighbors(pivot));
    for (const VertexId v : expand_order) {
      const auto nv = g_.neighbors(v);
      clique_.insert(std::lower_bound(clique_.begin(), clique_.end(), v), v);
      expand(intersect_sorted(t, nv), intersect_sorted(d, nv));
      clique_.erase(std::lower_bound(clique_.begin(), clique_.end(), v));
      t.erase(std::lower_bound(t.begin(), t.end(), v));
      d.insert(std::lower_bound(d.begin(), d.end(), v), v);
    }
    --depth_;
  }

  const Graph& g_;
  const std::vector<VertexId>& to_input_;
  const CliqueSink& sink_;
  RunStats& stats_;
  std::vector<VertexId> clique_;  // kept sorted; pivoting breaks growth order
  std::size_t depth_ = 0;
};

}  // namespace

VertexId choose_pivot(const Graph& g, const VertexSet& t, const VertexSet& d) {
  return pivot_from(g, t.ids(), d.ids());
}

RunStats enumerate_maximal_cliques(const Graph& g, const VertexOrder& order,
                                   const CliqueSink& sink) {
  RunStats stats;
  const auto start = std::chrono::steady_clock::now();
  const Graph relabeled = relabel(g, order);
  Enumerator enumerator(relabeled, order.perm, sink, stats);
  enumerator.run();
  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return stats;
}

}  // namespace mcsum
