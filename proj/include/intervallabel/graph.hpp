#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intervallabel/bitset.hpp"

namespace intervallabel {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on dense vertex ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws Error(kInvalidArgument) on an out-of-range id or a self-loop.
  // Duplicate edges are collapsed.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  const Bitset& neighbor_row(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

// Vertices at distance exactly two from `v`.
Bitset dist2_set(const Graph& g, Vertex v);

// Rows of the "distance exactly two" relation, computed once per graph.
class Distance2Index {
 public:
  explicit Distance2Index(const Graph& g);

  const Bitset& row(Vertex v) const { return rows_[v]; }
  bool at_distance_two(Vertex u, Vertex v) const { return rows_[u].test(v); }

 private:
  std::vector<Bitset> rows_;
};

Graph square(const Graph& g);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct GraphStats {
  int n = 0;
  std::size_t m = 0;
  int max_degree = 0;
  int min_degree = 0;
  // max |N(u) ∩ N(v)| over unordered pairs u != v.
  int multiplicity = 0;
  // Same maximum restricted to non-adjacent pairs.
  int multiplicity_nonadjacent = 0;
  bool is_connected = true;
  std::optional<int> omega;
};

// omega is filled only when n <= omega_cap.
GraphStats compute_stats(const Graph& g, std::optional<int> omega_cap = std::nullopt);

inline constexpr int kDefaultOmegaCap = 64;

// Exact maximum clique size by branch and bound with greedy coloring bounds.
// Throws Error(kTooLarge) when n > cap.
int clique_number_exact(const Graph& g, int cap = kDefaultOmegaCap);

// True iff no four vertices induce two disjoint edges.
bool is_2k2_free(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace intervallabel
