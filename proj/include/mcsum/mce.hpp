#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mcsum/graph.hpp"

namespace mcsum {

// A maximal clique; members are sorted ascending vertex ids of the host
// graph.
struct Clique {
  VertexSet members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  friend auto operator<=>(const Clique&, const Clique&) = default;
};

// Per-run counters shared by enumeration and summarization. r_samples holds
// the overlap ratio of each completed clique against the reference clique
// at completion time; completions with no reference yet contribute none.
struct RunStats {
  std::uint64_t summary_size = 0;
  std::uint64_t cliques_completed = 0;
  std::uint64_t branches_kept = 0;
  std::uint64_t branches_pruned = 0;
  std::uint64_t d_upper_sum = 0;  // diagnostic: sum of d-bounds over sampled frames
  std::vector<double> r_samples;
  double wall_time_seconds = 0.0;
  std::size_t peak_frames = 0;
};

// Receives each maximal clique with its emission sequence number. The
// clique is a fresh copy; the enumerator retains no reference to it.
// Exceptions thrown by the sink abort the enumeration and propagate.
using CliqueSink = std::function<void(const Clique&, std::uint64_t seq)>;

// The vertex of T union D maximizing |T intersect N(v)|, smallest id on
// ties. Throws std::invalid_argument when both sets are empty.
VertexId choose_pivot(const Graph& g, const VertexSet& t, const VertexSet& d);

// Backtracking enumeration with pivoting. The graph is relabeled by the
// order internally and candidates are expanded in ascending relabeled id;
// emitted cliques are reported in the input graph's vertex ids. Every
// maximal clique is delivered exactly once.
RunStats enumerate_maximal_cliques(const Graph& g, const VertexOrder& order,
                                   const CliqueSink& sink);

}  // namespace mcsum
