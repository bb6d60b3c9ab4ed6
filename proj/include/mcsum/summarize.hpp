#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcsum/decomposition.hpp"
#include "mcsum/graph.hpp"
#include "mcsum/mce.hpp"

namespace mcsum {

enum class SamplingKind { Baseline, Opt };
enum class SamplingMode { PerBranch, OneShot };
enum class YEstimatorKind { SetDiff, TValue, DegreeFiltered };

std::string to_string(SamplingKind kind);
std::string to_string(SamplingMode mode);
std::string to_string(YEstimatorKind kind);

struct SummaryConfig {
  double tau = 0.5;  // requested visibility threshold, in [0,1]
  SamplingKind sampling = SamplingKind::Opt;
  BoundKind bound = BoundKind::Truss;
  OrderKind order = OrderKind::Truss;
  YEstimatorKind y_estimator = YEstimatorKind::DegreeFiltered;
  SamplingMode mode = SamplingMode::PerBranch;
  std::uint64_t seed = 1;
  // When set, the keep/include probability is forced to 1 while the summary
  // is still empty, so a run can never come back empty-handed.
  bool force_first = false;
};

struct Summary {
  std::vector<Clique> cliques;  // in inclusion order, input-graph vertex ids
  SummaryConfig config;
  RunStats stats;
};

// Keep probability of the original sampling scheme:
// (1-r)(2-tau) / (2-r-tau), extended with the continuity value 0 at
// r = tau = 1. Decreasing in r, with s(0) = 1 and s(1) = 0.
double sampling_baseline(double r, double tau);

// Keep probability of the tighter scheme: (tau-r)/(1-r) on [0,tau) and 0 on
// [tau,1]. Never exceeds sampling_baseline.
double sampling_opt(double r, double tau);

// Per-branch keep probability: the l_upper-th root of the sampling value.
// l_upper must be >= 1.
double branch_keep_probability(double s_value, std::uint64_t l_upper);

// Upper bound on the size of any clique inside the candidate graph g_t,
// per the chosen bound, clamped to the vertex count and at least 1 when
// g_t is nonempty; 0 when g_t is empty.
std::uint32_t estimate_d_upper(const Graph& g_t, BoundKind bound);

// Upper bound on how many of t growth vertices can avoid the reference
// clique c_prev. g_t is the graph induced by T, so vertex i of g_t is T[i].
std::uint64_t estimate_y_upper(std::uint32_t t, const VertexSet& t_set,
                               const Clique& c_prev, const Graph& g_t,
                               YEstimatorKind kind);

// Lower bound on the overlap ratio any clique completed from configuration
// c can reach against c_prev:
//   min over 1 <= t <= d_upper of (|c n c_prev| + max(t - y_t, 0)) / (|c|+t).
// Returns 0 when c_prev is empty, and |c n c_prev|/|c| when d_upper is 0.
// Throws std::invalid_argument when both |c| and d_upper are 0.
double estimate_r_lower(const Clique& c, const Clique& c_prev,
                        const VertexSet& t_set, std::uint32_t d_upper,
                        YEstimatorKind kind, const Graph& g_t);

// Randomized branch-sampling enumeration. In PerBranch mode every frame
// with candidate work left draws once and survives with probability
// branch_keep_probability(sampling(r_lower, tau), |c| + d_upper); completed
// cliques join the summary unconditionally and become the reference. In
// OneShot mode the full enumeration runs unpruned and each completed clique
// joins with probability sampling(r, tau), the reference advancing only on
// inclusion. Identical (graph, config) pairs reproduce identical summaries.
Summary summarize(const Graph& g, const SummaryConfig& config);

}  // namespace mcsum
