#include "mcsum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>

#include "mcsum/rng.hpp"

namespace mcsum {

VertexSet VertexSet::from_sorted(std::vector<VertexId> ids) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) {
      throw std::invalid_argument("VertexSet: ids not strictly ascending");
    }
  }
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_unsorted(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<VertexId> intersect_sorted(std::span<const VertexId> a,
                                       std::span<const VertexId> b) {
  std::vector<VertexId> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet intersect_sorted(const VertexSet& a, const VertexSet& b) {
  return VertexSet::from_sorted(intersect_sorted(a.ids(), b.ids()));
}

std::size_t intersection_size(std::span<const VertexId> a,
                              std::span<const VertexId> b) {
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<VertexId> difference_sorted(std::span<const VertexId> a,
                                        std::span<const VertexId> b) {
  std::vector<VertexId> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

// Internal access to Graph storage for the construction routines below.
class GraphBuilder {
 public:
  // Takes symmetric, per-vertex-sorted, duplicate-free half edges encoded as
  // (u << 32) | v for every ordered direction, pre-sorted ascending.
  static Graph from_sorted_directed(VertexId n,
                                    const std::vector<std::uint64_t>& darts,
                                    std::vector<std::uint64_t> original) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.adjacency_.resize(darts.size());
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const VertexId u = static_cast<VertexId>(darts[i] >> 32);
      g.offsets_[u + 1]++;
      g.adjacency_[i] = static_cast<VertexId>(darts[i] & 0xffffffffu);
    }
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.original_ = std::move(original);
    normalize_original(g);
    return g;
  }

  static void normalize_original(Graph& g) {
    if (g.original_.empty()) return;
    for (VertexId v = 0; v < g.n_; ++v) {
      if (g.original_[v] != v) return;
    }
    g.original_.clear();
  }
};

namespace {

// Sorts, dedups and symmetrizes raw (u,v) pairs into dart form.
std::vector<std::uint64_t> make_darts(
    std::span<const std::pair<VertexId, VertexId>> edges,
    std::uint64_t* duplicates) {
  std::vector<std::uint64_t> darts;
  darts.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    darts.push_back((static_cast<std::uint64_t>(u) << 32) | v);
    darts.push_back((static_cast<std::uint64_t>(v) << 32) | u);
  }
  std::sort(darts.begin(), darts.end());
  const std::size_t before = darts.size();
  darts.erase(std::unique(darts.begin(), darts.end()), darts.end());
  if (duplicates) *duplicates = (before - darts.size()) / 2;
  return darts;
}

}  // namespace

Graph Graph::from_edges(VertexId n,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::pair<VertexId, VertexId>> kept;
  kept.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("Graph::from_edges: vertex id out of range");
    }
    if (u == v) continue;
    kept.emplace_back(u, v);
  }
  return GraphBuilder::from_sorted_directed(n, make_darts(kept, nullptr), {});
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

VertexId Graph::degree(VertexId v) const {
  if (v >= n_) throw std::out_of_range("Graph::degree: vertex out of range");
  return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::original_id(VertexId v) const {
  if (v >= n_) {
    throw std::out_of_range("Graph::original_id: vertex out of range");
  }
  return original_.empty() ? v : original_[v];
}

Graph parse_edge_list(std::istream& in, ParseStats* stats) {
  ParseStats local;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
  std::vector<std::uint64_t> mentioned;  // ids seen anywhere, incl. loops

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++local.lines_read;
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    };
    skip_ws();
    if (p == end) continue;    // blank line
    if (*p == '#') continue;   // comment
    std::uint64_t ids[2];
    for (int k = 0; k < 2; ++k) {
      skip_ws();
      auto [next, ec] = std::from_chars(p, end, ids[k]);
      if (ec != std::errc() || next == p) {
        throw ParseError(line_no, "expected two non-negative integer ids");
      }
      p = next;
    }
    skip_ws();
    if (p != end) {
      throw ParseError(line_no, "trailing characters after edge");
    }
    mentioned.push_back(ids[0]);
    mentioned.push_back(ids[1]);
    if (ids[0] == ids[1]) {
      ++local.self_loops_dropped;
      continue;
    }
    raw_edges.emplace_back(std::min(ids[0], ids[1]), std::max(ids[0], ids[1]));
  }

  // Compact source ids to 0..n-1, ascending by source id.
  std::sort(mentioned.begin(), mentioned.end());
  mentioned.erase(std::unique(mentioned.begin(), mentioned.end()),
                  mentioned.end());
  if (mentioned.size() > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "graph exceeds the 32-bit vertex id limit");
  }
  const VertexId n = static_cast<VertexId>(mentioned.size());
  auto compact = [&](std::uint64_t source) {
    return static_cast<VertexId>(
        std::lower_bound(mentioned.begin(), mentioned.end(), source) -
        mentioned.begin());
  };

  std::vector<std::uint64_t> darts;
  darts.reserve(raw_edges.size() * 2);
  for (const auto& [a, b] : raw_edges) {
    const VertexId u = compact(a);
    const VertexId v = compact(b);
    darts.push_back((static_cast<std::uint64_t>(u) << 32) | v);
    darts.push_back((static_cast<std::uint64_t>(v) << 32) | u);
  }
  std::sort(darts.begin(), darts.end());
  const std::size_t before = darts.size();
  darts.erase(std::unique(darts.begin(), darts.end()), darts.end());
  local.duplicate_edges_collapsed = (before - darts.size()) / 2;

  if (stats) *stats = local;
  return GraphBuilder::from_sorted_directed(n, darts, std::move(mentioned));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto ids = s.ids();
  if (!ids.empty() && ids.back() >= g.vertex_count()) {
    throw std::out_of_range("induced_subgraph: vertex out of range");
  }
  const VertexId m = static_cast<VertexId>(ids.size());
  std::vector<std::uint64_t> darts;
  std::vector<std::uint64_t> original(m);
  for (VertexId i = 0; i < m; ++i) {
    original[i] = g.original_id(ids[i]);
    const auto nb = g.neighbors(ids[i]);
    // Merge join of the neighbor slice with s; ranks in s become new ids.
    std::size_t a = 0, b = 0;
    while (a < nb.size() && b < ids.size()) {
      if (nb[a] < ids[b]) {
        ++a;
      } else if (ids[b] < nb[a]) {
        ++b;
      } else {
        darts.push_back((static_cast<std::uint64_t>(i) << 32) | b);
        ++a;
        ++b;
      }
    }
  }
  return GraphBuilder::from_sorted_directed(m, darts, std::move(original));
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Identity:
      return "identity";
    case OrderKind::Random:
      return "random";
    case OrderKind::Degeneracy:
      return "degeneracy";
    case OrderKind::Truss:
      return "truss";
  }
  return "unknown";
}

VertexOrder make_identity_order(VertexId n) {
  VertexOrder order;
  order.kind = OrderKind::Identity;
  order.perm.resize(n);
  for (VertexId i = 0; i < n; ++i) order.perm[i] = i;
  return order;
}

VertexOrder make_random_order(VertexId n, std::uint64_t seed) {
  VertexOrder order = make_identity_order(n);
  order.kind = OrderKind::Random;
  SeededRng rng(seed);
  for (VertexId i = n; i > 1; --i) {
    const auto j = static_cast<VertexId>(rng.below(i));
    std::swap(order.perm[i - 1], order.perm[j]);
  }
  return order;
}

Graph relabel(const Graph& g, const VertexOrder& order) {
  const VertexId n = g.vertex_count();
  if (order.perm.size() != n) {
    throw std::invalid_argument("relabel: order size mismatch");
  }
  std::vector<VertexId> new_id(n);
  std::vector<bool> seen(n, false);
  for (VertexId pos = 0; pos < n; ++pos) {
    const VertexId v = order.perm[pos];
    if (v >= n || seen[v]) {
      throw std::invalid_argument("relabel: order is not a permutation");
    }
    seen[v] = true;
    new_id[v] = pos;
  }
  std::vector<std::uint64_t> darts;
  darts.reserve(g.edge_count() * 2);
  std::vector<std::uint64_t> original(n);
  for (VertexId pos = 0; pos < n; ++pos) {
    const VertexId v = order.perm[pos];
    original[pos] = g.original_id(v);
    for (const VertexId w : g.neighbors(v)) {
      darts.push_back((static_cast<std::uint64_t>(pos) << 32) | new_id[w]);
    }
  }
  std::sort(darts.begin(), darts.end());
  return GraphBuilder::from_sorted_directed(n, darts, std::move(original));
}

}  // namespace mcsum
