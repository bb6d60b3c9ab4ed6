#include "mcsum/summarize.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "mcsum/detail/sampling.hpp"

namespace mcsum {

std::string to_string(SamplingKind kind) {
  return kind == SamplingKind::Baseline ? "baseline" : "opt";
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::PerBranch ? "branch" : "oneshot";
}

std::string to_string(YEstimatorKind kind) {
  switch (kind) {
    case YEstimatorKind::SetDiff:
      return "setdiff";
    case YEstimatorKind::TValue:
      return "t";
    case YEstimatorKind::DegreeFiltered:
      return "degree";
  }
  return "unknown";
}

double sampling_baseline(double r, double tau) {
  assert(r >= 0.0 && r <= 1.0 && tau >= 0.0 && tau <= 1.0);
  if (r == 1.0 && tau == 1.0) return 0.0;  // continuity along r -> 1
  return (1.0 - r) * (2.0 - tau) / (2.0 - r - tau);
}

double sampling_opt(double r, double tau) {
  assert(r >= 0.0 && r <= 1.0 && tau >= 0.0 && tau <= 1.0);
  if (r >= tau) return 0.0;
  return (tau - r) / (1.0 - r);
}

double branch_keep_probability(double s_value, std::uint64_t l_upper) {
  if (l_upper < 1) {
    throw std::invalid_argument("branch_keep_probability: l_upper must be >= 1");
  }
  if (s_value <= 0.0) return 0.0;
  if (s_value >= 1.0) return 1.0;
  return std::pow(s_value, 1.0 / static_cast<double>(l_upper));
}

std::uint32_t estimate_d_upper(const Graph& g_t, BoundKind bound) {
  const VertexId n = g_t.vertex_count();
  if (n == 0) return 0;
  std::uint32_t value = 0;
  switch (bound) {
    case BoundKind::H:
      value = h_bound(g_t);
      break;
    case BoundKind::Core:
      value = core_bound(g_t);
      break;
    case BoundKind::Truss:
      value = truss_bound(g_t);
      break;
  }
  return std::clamp<std::uint32_t>(value, 1, n);
}

namespace detail {

double sampling_value(SamplingKind kind, double r, double tau) {
  return kind == SamplingKind::Baseline ? sampling_baseline(r, tau)
                                        : sampling_opt(r, tau);
}

std::uint64_t y_upper_of(std::uint32_t t, std::span<const VertexId> t_set,
                         std::span<const VertexId> c_prev, const Graph& g_t,
                         YEstimatorKind kind) {
  if (kind == YEstimatorKind::TValue) return t;
  std::uint64_t count = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < t_set.size(); ++i) {
    while (j < c_prev.size() && c_prev[j] < t_set[i]) ++j;
    const bool covered = j < c_prev.size() && c_prev[j] == t_set[i];
    if (covered) continue;
    if (kind == YEstimatorKind::SetDiff ||
        g_t.degree(static_cast<VertexId>(i)) + 1 >= t) {
      ++count;  // DegreeFiltered keeps only vertices fitting a t-clique
    }
  }
  return count;
}

double r_lower_of(std::span<const VertexId> c, std::span<const VertexId> c_prev,
                  std::span<const VertexId> t_set, std::uint32_t d_upper,
                  YEstimatorKind kind, const Graph& g_t) {
  if (c_prev.empty()) return 0.0;
  const auto overlap = static_cast<double>(intersection_size(c, c_prev));
  if (d_upper == 0) {
    if (c.empty()) {
      throw std::invalid_argument(
          "estimate_r_lower: empty configuration with nothing to grow");
    }
    return overlap / static_cast<double>(c.size());
  }
  // For the degree-filtered estimator, y_t is the number of uncovered
  // candidates of degree >= t-1; one histogram serves every t.
  std::vector<std::uint32_t> uncovered_deg_at_least;
  if (kind == YEstimatorKind::DegreeFiltered) {
    uncovered_deg_at_least.assign(static_cast<std::size_t>(d_upper) + 1, 0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < t_set.size(); ++i) {
      while (j < c_prev.size() && c_prev[j] < t_set[i]) ++j;
      if (j < c_prev.size() && c_prev[j] == t_set[i]) continue;
      const auto deg = g_t.degree(static_cast<VertexId>(i));
      uncovered_deg_at_least[std::min<std::uint32_t>(deg, d_upper)]++;
    }
    for (std::uint32_t k = d_upper; k > 0; --k) {
      uncovered_deg_at_least[k - 1] += uncovered_deg_at_least[k];
    }
  }
  std::uint64_t set_diff = 0;
  if (kind == YEstimatorKind::SetDiff) {
    set_diff = t_set.size() - intersection_size(t_set, c_prev);
  }
  double best = 1.0;
  for (std::uint32_t t = 1; t <= d_upper; ++t) {
    std::uint64_t y_t = 0;
    switch (kind) {
      case YEstimatorKind::SetDiff:
        y_t = set_diff;
        break;
      case YEstimatorKind::TValue:
        y_t = t;
        break;
      case YEstimatorKind::DegreeFiltered:
        y_t = uncovered_deg_at_least[t - 1];
        break;
    }
    const double covered_growth =
        t > y_t ? static_cast<double>(t - y_t) : 0.0;
    const double value =
        (overlap + covered_growth) / static_cast<double>(c.size() + t);
    best = std::min(best, value);
  }
  return best;
}

}  // namespace detail

std::uint64_t estimate_y_upper(std::uint32_t t, const VertexSet& t_set,
                               const Clique& c_prev, const Graph& g_t,
                               YEstimatorKind kind) {
  return detail::y_upper_of(t, t_set.ids(), c_prev.members.ids(), g_t, kind);
}

double estimate_r_lower(const Clique& c, const Clique& c_prev,
                        const VertexSet& t_set, std::uint32_t d_upper,
                        YEstimatorKind kind, const Graph& g_t) {
  return detail::r_lower_of(c.members.ids(), c_prev.members.ids(), t_set.ids(),
                            d_upper, kind, g_t);
}

Summary summarize(const Graph& g, const SummaryConfig& config) {
  detail::NoProbe probe;
  return detail::summarize_with<false>(g, config, probe);
}

}  // namespace mcsum
