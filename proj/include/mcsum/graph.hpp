#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcsum {

using VertexId = std::uint32_t;

// A strictly ascending sequence of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;

  // ids must be strictly ascending; throws std::invalid_argument otherwise.
  static VertexSet from_sorted(std::vector<VertexId> ids);

  // Sorts and removes duplicates.
  static VertexSet from_unsorted(std::vector<VertexId> ids);

  std::span<const VertexId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  VertexId operator[](std::size_t i) const { return ids_[i]; }
  bool contains(VertexId v) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

// Sorted-sequence primitives. Inputs must be strictly ascending.
std::vector<VertexId> intersect_sorted(std::span<const VertexId> a,
                                       std::span<const VertexId> b);
VertexSet intersect_sorted(const VertexSet& a, const VertexSet& b);
std::size_t intersection_size(std::span<const VertexId> a,
                              std::span<const VertexId> b);
// Elements of a not present in b.
std::vector<VertexId> difference_sorted(std::span<const VertexId> a,
                                        std::span<const VertexId> b);

struct ParseStats {
  std::uint64_t lines_read = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicate_edges_collapsed = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Immutable undirected graph in compressed adjacency form. Neighbor lists
// are strictly ascending, symmetric, and free of self-loops and duplicates.
// Construction is single-threaded; a built Graph is safe to share across
// threads for read-only use.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary edge list over vertices 0..n-1: self-loops are
  // dropped, duplicates collapsed, and both directions stored.
  static Graph from_edges(VertexId n,
                          std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return adjacency_.size() / 2; }

  // Sorted neighbors of v as a zero-copy view. Throws std::out_of_range.
  std::span<const VertexId> neighbors(VertexId v) const;
  VertexId degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  // Source-file id of an internal vertex (identity when the graph was not
  // loaded from a file or the source ids were already dense).
  std::uint64_t original_id(VertexId v) const;
  bool has_original_ids() const { return !original_.empty(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  VertexId n_ = 0;
  std::vector<std::uint64_t> offsets_;  // n_ + 1 entries
  std::vector<VertexId> adjacency_;
  std::vector<std::uint64_t> original_;  // empty means identity
};

// Reads whitespace-separated "u v" lines; lines starting with '#' are
// comments and blank lines are skipped. Source ids are compacted to 0..n-1
// in ascending source order and retained as original ids. Duplicate edges
// (in either direction) are collapsed and self-loops dropped, with counts
// reported through stats. Malformed lines raise ParseError with the
// 1-based line number. Empty input yields the empty graph.
Graph parse_edge_list(std::istream& in, ParseStats* stats = nullptr);

// Graph over the vertices of s only, relabeled so that vertex i of the
// result corresponds to s[i]; original ids are composed through.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

enum class OrderKind { Identity, Random, Degeneracy, Truss };

std::string to_string(OrderKind kind);

// A permutation of the vertex ids: the vertex perm[i] is placed at
// position i, i.e. receives id i after relabeling.
struct VertexOrder {
  OrderKind kind = OrderKind::Identity;
  std::vector<VertexId> perm;

  std::size_t size() const { return perm.size(); }
};

VertexOrder make_identity_order(VertexId n);
VertexOrder make_random_order(VertexId n, std::uint64_t seed);

// Isomorphic copy of g where position in the order becomes the vertex id.
// Throws std::invalid_argument if order is not a permutation of 0..n-1.
Graph relabel(const Graph& g, const VertexOrder& order);

}  // namespace mcsum
