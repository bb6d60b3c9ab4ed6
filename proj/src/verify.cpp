#include "mcsum/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "mcsum/detail/sampling.hpp"

namespace mcsum {

namespace {

using Mask = std::uint32_t;

void collect_cliques(const std::vector<Mask>& adjacency, Mask clique,
                     Mask common_all, Mask growth, VertexId n,
                     std::vector<Clique>& out) {
  if (common_all == 0) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (clique & (Mask{1} << v)) members.push_back(v);
    }
    out.push_back(Clique{VertexSet::from_sorted(std::move(members))});
  }
  // Extend with higher-numbered common neighbors only, so each clique is
  // built exactly once.
  Mask todo = growth;
  while (todo != 0) {
    const int v = std::countr_zero(todo);
    todo &= todo - 1;
    const Mask bit = Mask{1} << v;
    collect_cliques(adjacency, clique | bit, common_all & adjacency[v],
                    growth & adjacency[v] & ~(bit | (bit - 1)), n, out);
  }
}

}  // namespace

std::vector<Clique> brute_force_mce(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n > kBruteForceVertexCap) {
    throw std::invalid_argument(
        "brute_force_mce: graph exceeds the oracle vertex cap");
  }
  std::vector<Mask> adjacency(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (const VertexId w : g.neighbors(v)) adjacency[v] |= Mask{1} << w;
  }
  std::vector<Clique> out;
  for (VertexId v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    collect_cliques(adjacency, bit, adjacency[v],
                    adjacency[v] & ~(bit | (bit - 1)), n, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double visibility(const Clique& c, std::span<const Clique> summary) {
  double best = 0.0;
  for (const Clique& other : summary) {
    best = std::max(best, local_visibility(c, other));
  }
  return best;
}

double visibility(const Clique& c, const Summary& summary) {
  return visibility(c, summary.cliques);
}

double local_visibility(const Clique& c, const Clique& c_prev) {
  if (c.empty()) {
    throw std::invalid_argument("local_visibility: empty clique");
  }
  if (c_prev.empty()) return 0.0;
  return static_cast<double>(
             intersection_size(c.members.ids(), c_prev.members.ids())) /
         static_cast<double>(c.size());
}

VisibilityReport audit_tau_visible(std::span<const Clique> all_cliques,
                                   std::span<const Clique> summary,
                                   double tau) {
  VisibilityReport report;
  report.tau = tau;
  report.cliques.assign(all_cliques.begin(), all_cliques.end());
  report.per_clique.reserve(all_cliques.size());
  double sum = 0.0;
  double min_v = all_cliques.empty() ? 0.0 : 1.0;
  for (const Clique& c : all_cliques) {
    const double v = visibility(c, summary);
    report.per_clique.push_back(v);
    sum += v;
    min_v = std::min(min_v, v);
    if (v < tau) report.violating.push_back(c);
  }
  report.min_visibility = min_v;
  report.mean_visibility =
      all_cliques.empty() ? 0.0 : sum / static_cast<double>(all_cliques.size());
  return report;
}

VisibilityReport audit_tau_visible(const Graph& g, const Summary& summary,
                                   double tau) {
  const auto cliques = brute_force_mce(g);
  return audit_tau_visible(cliques, summary.cliques, tau);
}

ExpectedVisibilityResult estimate_expected_visibility(
    const Graph& g, const SummaryConfig& config,
    std::span<const std::uint64_t> seeds) {
  if (seeds.size() < 2) {
    throw std::invalid_argument(
        "estimate_expected_visibility: at least two runs required");
  }
  {
    std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
    if (unique.size() != seeds.size()) {
      throw std::invalid_argument(
          "estimate_expected_visibility: seeds must be distinct");
    }
  }
  ExpectedVisibilityResult result;
  result.cliques = brute_force_mce(g);
  const std::size_t m = result.cliques.size();
  std::vector<double> sum(m, 0.0);
  std::vector<double> sum_sq(m, 0.0);
  for (const std::uint64_t seed : seeds) {
    SummaryConfig run_config = config;
    run_config.seed = seed;
    const Summary s = summarize(g, run_config);
    std::set<Clique> included(s.cliques.begin(), s.cliques.end());
    for (std::size_t i = 0; i < m; ++i) {
      const double value = included.count(result.cliques[i]) > 0
                               ? 1.0
                               : visibility(result.cliques[i], s.cliques);
      sum[i] += value;
      sum_sq[i] += value * value;
    }
  }
  const auto runs = static_cast<double>(seeds.size());
  result.estimates.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double mean = sum[i] / runs;
    const double variance =
        std::max(0.0, (sum_sq[i] - runs * mean * mean) / (runs - 1.0));
    result.estimates[i] = {mean, std::sqrt(variance / runs),
                           static_cast<std::uint32_t>(seeds.size())};
  }
  return result;
}

ExpectedVisibilityResult estimate_expected_visibility(
    const Graph& g, const SummaryConfig& config, std::uint32_t runs) {
  std::vector<std::uint64_t> seeds(runs);
  for (std::uint32_t i = 0; i < runs; ++i) seeds[i] = config.seed + i;
  return estimate_expected_visibility(g, config, seeds);
}

double average_r(const RunStats& stats) {
  if (stats.r_samples.empty()) {
    throw std::invalid_argument("average_r: no overlap samples recorded");
  }
  double sum = 0.0;
  for (const double r : stats.r_samples) sum += r;
  return sum / static_cast<double>(stats.r_samples.size());
}

Summary shadow_summarize(const Graph& g, const SummaryConfig& config) {
  detail::NoProbe probe;
  return detail::summarize_with<true>(g, config, probe);
}

}  // namespace mcsum
