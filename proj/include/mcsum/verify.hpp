#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcsum/graph.hpp"
#include "mcsum/mce.hpp"
#include "mcsum/summarize.hpp"

namespace mcsum {

// Ground-truth enumeration by growth over bitmask vertex sets with an
// explicit maximality filter; shares no code with the backtracking
// enumerator. Refuses graphs with more than kBruteForceVertexCap vertices.
inline constexpr VertexId kBruteForceVertexCap = 24;
std::vector<Clique> brute_force_mce(const Graph& g);

// Best overlap ratio of c against any clique of the summary; 0 for an
// empty summary.
double visibility(const Clique& c, std::span<const Clique> summary);
double visibility(const Clique& c, const Summary& summary);

// Overlap ratio against a single reference clique; 0 when the reference is
// empty. c must be nonempty.
double local_visibility(const Clique& c, const Clique& c_prev);

struct VisibilityReport {
  double tau = 0.0;
  std::vector<Clique> cliques;      // everything audited
  std::vector<double> per_clique;   // aligned visibilities
  double min_visibility = 0.0;
  double mean_visibility = 0.0;
  std::vector<Clique> violating;    // visibility < tau
};

// Visibility of every maximal clique against the summary. The Graph
// overload derives the clique set via brute_force_mce and inherits its
// size cap.
VisibilityReport audit_tau_visible(std::span<const Clique> all_cliques,
                                   std::span<const Clique> summary, double tau);
VisibilityReport audit_tau_visible(const Graph& g, const Summary& summary,
                                   double tau);

struct ExpectationEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint32_t runs = 0;
};

struct ExpectedVisibilityResult {
  std::vector<Clique> cliques;  // all maximal cliques of the graph
  std::vector<ExpectationEstimate> estimates;  // aligned
};

// Monte-Carlo estimate of each maximal clique's expected visibility: a run
// scores 1 when the clique entered that run's summary and its exact
// visibility against the summary otherwise. Seeds must be distinct and at
// least two; the runs overload uses config.seed, config.seed+1, ...
ExpectedVisibilityResult estimate_expected_visibility(
    const Graph& g, const SummaryConfig& config,
    std::span<const std::uint64_t> seeds);
ExpectedVisibilityResult estimate_expected_visibility(
    const Graph& g, const SummaryConfig& config, std::uint32_t runs);

// Mean of the recorded per-clique overlap samples; throws
// std::invalid_argument when none were recorded.
double average_r(const RunStats& stats);

// Measurement-protocol variant of summarize: discarded branches are still
// searched so every maximal clique contributes an overlap sample, but their
// cliques cannot enter the summary and no extra random draws occur. The
// returned summary therefore matches summarize() for the same config, while
// stats cover the whole enumeration.
Summary shadow_summarize(const Graph& g, const SummaryConfig& config);

}  // namespace mcsum
