#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcsum/graph.hpp"

namespace mcsum {

struct CoreResult {
  std::vector<std::uint32_t> core_number;  // per vertex
  VertexOrder degeneracy_order;
  std::uint32_t degeneracy = 0;  // max core number
};

// Peels vertices in ascending (current degree, id) order. Along the
// resulting degeneracy order every vertex has at most `degeneracy`
// neighbors placed after itself, and core numbers are non-decreasing.
CoreResult core_decompose(const Graph& g);

struct EdgeSupportResult {
  // Undirected edges as (u,v) with u < v, ascending lexicographic.
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint32_t> support;  // triangles through each edge
};

EdgeSupportResult edge_support(const Graph& g);

struct TrussResult {
  std::vector<std::pair<VertexId, VertexId>> edges;  // as in EdgeSupportResult
  std::vector<std::uint32_t> edge_truss;             // >= 2 per edge
  // Max truss number over incident edges; 1 for isolated vertices.
  std::vector<std::uint32_t> vertex_truss;
  // Vertices in the order their last incident edge was peeled; isolated
  // vertices first in ascending id. vertex_truss is non-decreasing along it.
  VertexOrder truss_order;
  // Max edge truss number; 1 for an edgeless nonempty graph, 0 when empty.
  std::uint32_t max_truss = 0;
};

// Support peeling: repeatedly removes the edge in the fewest remaining
// triangles, ties broken by ascending (u,v).
TrussResult truss_decompose(const Graph& g);

enum class BoundKind { H, Core, Truss };

std::string to_string(BoundKind kind);

// Clique-size upper bounds for a whole graph. All three return 0 for the
// empty graph and 1 for a nonempty edgeless graph, and they satisfy
// h_bound >= core_bound >= truss_bound >= max clique size.

// Largest h such that at least h vertices have degree >= h-1.
std::uint32_t h_bound(const Graph& g);
// Max core number + 1.
std::uint32_t core_bound(const Graph& g);
// Max truss number.
std::uint32_t truss_bound(const Graph& g);

// Builds the requested vertex order for g. The seed is used only by
// OrderKind::Random.
VertexOrder make_order(const Graph& g, OrderKind kind, std::uint64_t seed);

}  // namespace mcsum
