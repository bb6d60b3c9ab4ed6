#pragma once

// Shared recursion behind summarize() and the verifier's shadow runs. The
// Probe parameter compiles away for production use; ExplorePruned keeps
// searching below discarded frames without letting their cliques into the
// summary and without consuming random draws, so the surviving part of the
// run sees the same draw sequence as an unprobed run with the same seed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcsum/graph.hpp"
#include "mcsum/mce.hpp"
#include "mcsum/rng.hpp"
#include "mcsum/summarize.hpp"

namespace mcsum::detail {

struct NoProbe {
  void frame_enter(std::span<const VertexId> /*c*/,
                   std::span<const VertexId> /*t*/,
                   std::span<const VertexId> /*d*/, bool /*live*/) {}
  void frame_sampled(std::uint32_t /*d_upper*/, double /*r_lower*/,
                     std::uint64_t /*l_upper*/, bool /*kept*/) {}
  void frame_exit() {}
  void clique_completed(std::span<const VertexId> /*members*/, double /*r*/,
                        bool /*included*/, bool /*live*/) {}
};

double sampling_value(SamplingKind kind, double r, double tau);

// Span-based cores of the public estimators.
std::uint64_t y_upper_of(std::uint32_t t, std::span<const VertexId> t_set,
                         std::span<const VertexId> c_prev, const Graph& g_t,
                         YEstimatorKind kind);
double r_lower_of(std::span<const VertexId> c, std::span<const VertexId> c_prev,
                  std::span<const VertexId> t_set, std::uint32_t d_upper,
                  YEstimatorKind kind, const Graph& g_t);

struct SamplingOutcome {
  std::vector<std::vector<VertexId>> summary;
  RunStats stats;
};

template <bool ExplorePruned, class Probe>
class SamplingRun {
 public:
  SamplingRun(const Graph& g, const SummaryConfig& cfg, Probe& probe)
      : g_(g), cfg_(cfg), probe_(probe), rng_(cfg.seed) {}

  SamplingOutcome take() && {
    const VertexId n = g_.vertex_count();
    if (n > 0) {
      std::vector<VertexId> t(n);
      for (VertexId v = 0; v < n; ++v) t[v] = v;
      expand(std::move(t), {}, true);
    }
    outcome_.stats.summary_size = outcome_.summary.size();
    return std::move(outcome_);
  }

 private:
  double overlap_ratio(std::span<const VertexId> c) const {
    return c.empty() ? 0.0
                     : static_cast<double>(intersection_size(c, c_prev_)) /
                           static_cast<double>(c.size());
  }

  void complete(bool live) {
    auto& stats = outcome_.stats;
    ++stats.cliques_completed;
    const bool have_reference = !c_prev_.empty();
    const double r = have_reference ? overlap_ratio(clique_) : 0.0;
    if (have_reference) stats.r_samples.push_back(r);
    bool included = false;
    if (cfg_.mode == SamplingMode::PerBranch) {
      included = live;
    } else {
      // One-shot: a single draw per completed clique, no branch pruning.
      const double p = (cfg_.force_first && outcome_.summary.empty())
                           ? 1.0
                           : sampling_value(cfg_.sampling, r, cfg_.tau);
      included = rng_.uniform01() < p;
    }
    if (included) {
      outcome_.summary.push_back(clique_);
      c_prev_ = clique_;
    }
    probe_.clique_completed(clique_, r, included, live);
  }

  void expand(std::vector<VertexId> t, std::vector<VertexId> d, bool live) {
    ++depth_;
    outcome_.stats.peak_frames = std::max(outcome_.stats.peak_frames, depth_);
    probe_.frame_enter(clique_, t, d, live);
    if (t.empty() && d.empty()) {
      complete(live);
      probe_.frame_exit();
      --depth_;
      return;
    }
    bool kept = true;
    Graph g_t;  // candidate-set graph, shared by bounds and pivot scoring
    bool have_g_t = false;
    if (live && cfg_.mode == SamplingMode::PerBranch) {
      g_t = induced_subgraph(g_, VertexSet::from_sorted(t));
      have_g_t = true;
      const std::uint32_t d_upper = estimate_d_upper(g_t, cfg_.bound);
      const double r_lower =
          r_lower_of(clique_, c_prev_, t, d_upper, cfg_.y_estimator, g_t);
      const std::uint64_t l_upper =
          d_upper > 0 ? clique_.size() + d_upper
                      : std::max<std::uint64_t>(clique_.size(), 1);
      const double p =
          (cfg_.force_first && outcome_.summary.empty())
              ? 1.0
              : branch_keep_probability(
                    sampling_value(cfg_.sampling, r_lower, cfg_.tau), l_upper);
      kept = rng_.uniform01() < p;
      auto& stats = outcome_.stats;
      kept ? ++stats.branches_kept : ++stats.branches_pruned;
      stats.d_upper_sum += d_upper;
      probe_.frame_sampled(d_upper, r_lower, l_upper, kept);
    }
    const bool child_live = live && kept;
    if (!child_live && !ExplorePruned) {
      probe_.frame_exit();
      --depth_;
      return;
    }
    const VertexId pivot = pivot_of(t, d, have_g_t ? &g_t : nullptr);
    const std::vector<VertexId> expand_order =
        difference_sorted(t, g_.neighbors(pivot));
    for (const VertexId v : expand_order) {
      const auto nv = g_.neighbors(v);
      clique_.insert(std::lower_bound(clique_.begin(), clique_.end(), v), v);
      expand(intersect_sorted(t, nv), intersect_sorted(d, nv), child_live);
      clique_.erase(std::lower_bound(clique_.begin(), clique_.end(), v));
      t.erase(std::lower_bound(t.begin(), t.end(), v));
      d.insert(std::lower_bound(d.begin(), d.end(), v), v);
    }
    probe_.frame_exit();
    --depth_;
  }

  VertexId pivot_of(std::span<const VertexId> t, std::span<const VertexId> d,
                    const Graph* g_t) const {
    VertexId best = 0;
    std::size_t best_score = 0;
    bool have = false;
    auto consider = [&](VertexId v, std::size_t score) {
      if (!have || score > best_score || (score == best_score && v < best)) {
        best = v;
        best_score = score;
        have = true;
      }
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
      // In the candidate graph, vertex i stands for t[i].
      consider(t[i], g_t ? g_t->degree(static_cast<VertexId>(i))
                         : intersection_size(t, g_.neighbors(t[i])));
    }
    for (const VertexId v : d) {
      consider(v, intersection_size(t, g_.neighbors(v)));
    }
    return best;
  }

  const Graph& g_;
  const SummaryConfig& cfg_;
  Probe& probe_;
  SeededRng rng_;
  SamplingOutcome outcome_;
  std::vector<VertexId> clique_;  // current configuration, kept sorted
  std::vector<VertexId> c_prev_;  // last included clique
  std::size_t depth_ = 0;
};

template <bool ExplorePruned, class Probe>
SamplingOutcome run_sampling(const Graph& g, const SummaryConfig& cfg,
                             Probe& probe) {
  return SamplingRun<ExplorePruned, Probe>(g, cfg, probe).take();
}

// The order construction draws from a stream separate from the branch draws.
inline std::uint64_t order_seed_of(std::uint64_t seed) {
  return seed ^ 0x9e3779b97f4a7c15ull;
}

// Full summarize pipeline: order, relabel, sampled enumeration, and mapping
// the summary back to the input graph's ids. Probe callbacks observe the
// relabeled id space.
template <bool ExplorePruned, class Probe>
Summary summarize_with(const Graph& g, const SummaryConfig& cfg, Probe& probe) {
  if (!(cfg.tau >= 0.0 && cfg.tau <= 1.0)) {
    throw std::invalid_argument("summarize: tau must lie in [0,1]");
  }
  Summary out;
  out.config = cfg;
  const auto start = std::chrono::steady_clock::now();
  const VertexOrder order = make_order(g, cfg.order, order_seed_of(cfg.seed));
  const Graph relabeled = relabel(g, order);
  auto outcome = run_sampling<ExplorePruned>(relabeled, cfg, probe);
  out.stats = std::move(outcome.stats);
  out.cliques.reserve(outcome.summary.size());
  for (auto& members : outcome.summary) {
    for (auto& v : members) v = order.perm[v];
    std::sort(members.begin(), members.end());
    out.cliques.push_back(Clique{VertexSet::from_sorted(std::move(members))});
  }
  out.stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace mcsum::detail
