#include "mcsum/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace mcsum {

CoreResult core_decompose(const Graph& g) {
  const VertexId n = g.vertex_count();
  CoreResult result;
  result.core_number.assign(n, 0);
  result.degeneracy_order.kind = OrderKind::Degeneracy;
  result.degeneracy_order.perm.reserve(n);

  std::vector<std::uint32_t> deg(n);
  // Min-heap over (current degree, id) keys; stale entries are skipped on
  // pop, which keeps the id tie-break exact.
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>,
                      std::greater<>>
      heap;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    heap.push((static_cast<std::uint64_t>(deg[v]) << 32) | v);
  }
  std::vector<bool> removed(n, false);
  std::uint32_t running_max = 0;
  while (!heap.empty()) {
    const std::uint64_t key = heap.top();
    heap.pop();
    const VertexId v = static_cast<VertexId>(key & 0xffffffffu);
    const auto key_deg = static_cast<std::uint32_t>(key >> 32);
    if (removed[v] || key_deg != deg[v]) continue;
    removed[v] = true;
    running_max = std::max(running_max, deg[v]);
    result.core_number[v] = running_max;
    result.degeneracy_order.perm.push_back(v);
    for (const VertexId w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        heap.push((static_cast<std::uint64_t>(deg[w]) << 32) | w);
      }
    }
  }
  result.degeneracy = running_max;
  return result;
}

namespace {

// Edge ids follow the lexicographic (u,v), u < v enumeration. forward[u]
// gives the id of u's first such edge; lookup resolves (a,b) by rank.
struct EdgeIndex {
  std::vector<std::uint64_t> forward;  // n + 1
  const Graph* g = nullptr;

  explicit EdgeIndex(const Graph& graph) : g(&graph) {
    const VertexId n = graph.vertex_count();
    forward.assign(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId u = 0; u < n; ++u) {
      const auto nb = graph.neighbors(u);
      forward[u + 1] =
          forward[u] +
          static_cast<std::uint64_t>(
              nb.end() - std::upper_bound(nb.begin(), nb.end(), u));
    }
  }

  std::uint64_t edge_count() const { return forward.back(); }

  std::uint64_t id(VertexId a, VertexId b) const {
    const VertexId u = std::min(a, b);
    const VertexId v = std::max(a, b);
    const auto nb = g->neighbors(u);
    const auto first = std::upper_bound(nb.begin(), nb.end(), u);
    const auto pos = std::lower_bound(first, nb.end(), v);
    return forward[u] + static_cast<std::uint64_t>(pos - first);
  }
};

}  // namespace

EdgeSupportResult edge_support(const Graph& g) {
  EdgeSupportResult result;
  const VertexId n = g.vertex_count();
  result.edges.reserve(g.edge_count());
  result.support.reserve(g.edge_count());
  for (VertexId u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    for (const VertexId v : nb) {
      if (v <= u) continue;
      result.edges.emplace_back(u, v);
      result.support.push_back(static_cast<std::uint32_t>(
          intersection_size(nb, g.neighbors(v))));
    }
  }
  return result;
}

TrussResult truss_decompose(const Graph& g) {
  const VertexId n = g.vertex_count();
  TrussResult result;
  result.truss_order.kind = OrderKind::Truss;
  result.truss_order.perm.reserve(n);

  auto supports = edge_support(g);
  result.edges = std::move(supports.edges);
  const std::uint64_t m = result.edges.size();
  result.edge_truss.assign(m, 0);
  std::vector<std::uint32_t>& support = supports.support;

  EdgeIndex index(g);

  std::vector<std::uint32_t> live_degree(n);
  for (VertexId v = 0; v < n; ++v) live_degree[v] = g.degree(v);
  // Isolated vertices leave the peeling first, in ascending id.
  for (VertexId v = 0; v < n; ++v) {
    if (live_degree[v] == 0) result.truss_order.perm.push_back(v);
  }

  using Key = std::tuple<std::uint32_t, VertexId, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (std::uint64_t e = 0; e < m; ++e) {
    heap.emplace(support[e], result.edges[e].first, result.edges[e].second);
  }

  std::vector<bool> removed(m, false);
  std::uint32_t k = 2;
  auto drop_endpoint = [&](VertexId v) {
    if (--live_degree[v] == 0) result.truss_order.perm.push_back(v);
  };
  while (!heap.empty()) {
    const auto [s, u, v] = heap.top();
    heap.pop();
    const std::uint64_t e = index.id(u, v);
    if (removed[e] || s != support[e]) continue;
    removed[e] = true;
    k = std::max(k, s + 2);
    result.edge_truss[e] = k;
    // Triangles through (u,v) lose this edge; both remaining sides decay.
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) {
        ++i;
      } else if (nv[j] < nu[i]) {
        ++j;
      } else {
        const VertexId w = nu[i];
        const std::uint64_t e1 = index.id(u, w);
        const std::uint64_t e2 = index.id(v, w);
        if (!removed[e1] && !removed[e2]) {
          --support[e1];
          heap.emplace(support[e1], std::min(u, w), std::max(u, w));
          --support[e2];
          heap.emplace(support[e2], std::min(v, w), std::max(v, w));
        }
        ++i;
        ++j;
      }
    }
    // u < v by construction, so a doubly-dead edge peels u first.
    drop_endpoint(u);
    drop_endpoint(v);
  }

  result.vertex_truss.assign(n, 1);
  std::uint32_t max_truss = 0;
  for (std::uint64_t e = 0; e < m; ++e) {
    const auto [u, v] = result.edges[e];
    result.vertex_truss[u] = std::max(result.vertex_truss[u],
                                      result.edge_truss[e]);
    result.vertex_truss[v] = std::max(result.vertex_truss[v],
                                      result.edge_truss[e]);
    max_truss = std::max(max_truss, result.edge_truss[e]);
  }
  result.max_truss = m > 0 ? max_truss : (n > 0 ? 1u : 0u);
  return result;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::H:
      return "h";
    case BoundKind::Core:
      return "core";
    case BoundKind::Truss:
      return "truss";
  }
  return "unknown";
}

std::uint32_t h_bound(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) return 0;
  // at_least[d] = number of vertices with degree >= d.
  std::vector<std::uint32_t> at_least(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) at_least[g.degree(v)]++;
  for (VertexId d = n; d > 0; --d) at_least[d - 1] += at_least[d];
  for (std::uint32_t h = n; h >= 1; --h) {
    if (at_least[h - 1] >= h) return h;
  }
  return 0;  // unreachable for n > 0: h = 1 always holds
}

std::uint32_t core_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return core_decompose(g).degeneracy + 1;
}

std::uint32_t truss_bound(const Graph& g) { return truss_decompose(g).max_truss; }

VertexOrder make_order(const Graph& g, OrderKind kind, std::uint64_t seed) {
  switch (kind) {
    case OrderKind::Identity:
      return make_identity_order(g.vertex_count());
    case OrderKind::Random:
      return make_random_order(g.vertex_count(), seed);
    case OrderKind::Degeneracy:
      return core_decompose(g).degeneracy_order;
    case OrderKind::Truss:
      return truss_decompose(g).truss_order;
  }
  throw std::invalid_argument("make_order: unknown order kind");
}

}  // namespace mcsum
