#include "intervallabel/graph.hpp"

#include <algorithm>
#include <string>

#include "intervallabel/error.hpp"

namespace intervallabel {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  g.rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has a vertex id outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (g.rows_[u].test(v)) continue;
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  for (int v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    g.rows_[v].for_each([&](std::size_t u) { adj.push_back(static_cast<Vertex>(u)); });
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

static void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.n())
    throw Error(ErrorCode::kInvalidArgument, "vertex id " + std::to_string(v) + " out of range");
}

Bitset dist2_set(const Graph& g, Vertex v) {
  check_vertex(g, v);
  Bitset out(static_cast<std::size_t>(g.n()));
  for (Vertex w : g.neighbors(v)) out |= g.neighbor_row(w);
  out.subtract(g.neighbor_row(v));
  out.reset(static_cast<std::size_t>(v));
  return out;
}

Distance2Index::Distance2Index(const Graph& g) {
  rows_.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) rows_.push_back(dist2_set(g, v));
}

Graph square(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u) {
    Bitset reach = dist2_set(g, u);
    reach |= g.neighbor_row(u);
    reach.for_each([&](std::size_t v) {
      if (u < static_cast<Vertex>(v)) edges.emplace_back(u, static_cast<Vertex>(v));
    });
  }
  return Graph::from_edges(g.n(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(g.n(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

GraphStats compute_stats(const Graph& g, std::optional<int> omega_cap) {
  GraphStats s;
  s.n = g.n();
  s.m = g.edge_count();
  if (g.n() > 0) {
    s.min_degree = g.degree(0);
    for (Vertex v = 0; v < g.n(); ++v) {
      s.max_degree = std::max(s.max_degree, g.degree(v));
      s.min_degree = std::min(s.min_degree, g.degree(v));
    }
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      int common = static_cast<int>(g.neighbor_row(u).count_and(g.neighbor_row(v)));
      s.multiplicity = std::max(s.multiplicity, common);
      if (!g.adjacent(u, v))
        s.multiplicity_nonadjacent = std::max(s.multiplicity_nonadjacent, common);
    }
  }
  s.is_connected = is_connected(g);
  if (omega_cap && g.n() <= *omega_cap) s.omega = clique_number_exact(g, *omega_cap);
  return s;
}

namespace {

// Tomita-style maximum clique search: candidates are greedily colored and a
// branch is cut once |current| + colors cannot beat the incumbent.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int run() {
    if (g_.n() == 0) return 0;
    best_ = 1;
    Bitset all(static_cast<std::size_t>(g_.n()));
    for (Vertex v = 0; v < g_.n(); ++v) all.set(static_cast<std::size_t>(v));
    expand(all, 0);
    return best_;
  }

 private:
  void color_sort(const Bitset& candidates, std::vector<Vertex>& order,
                  std::vector<int>& bounds) const {
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset available = uncolored;
      for (std::size_t v = available.find_first(); v < available.size();
           v = available.find_next(v + 1)) {
        available.subtract(g_.neighbor_row(static_cast<Vertex>(v)));
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bounds.push_back(color);
      }
    }
  }

  void expand(Bitset candidates, int depth) {
    std::vector<Vertex> order;
    std::vector<int> bounds;
    color_sort(candidates, order, bounds);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + bounds[i] <= best_) return;
      Vertex v = order[i];
      Bitset next = candidates;
      next &= g_.neighbor_row(v);
      if (next.none()) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(next, depth + 1);
      }
      candidates.reset(static_cast<std::size_t>(v));
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

int clique_number_exact(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw Error(ErrorCode::kTooLarge, "instance too large for exact clique number: n=" +
                                          std::to_string(g.n()) + " > cap " + std::to_string(cap));
  }
  return CliqueSearch(g).run();
}

bool is_2k2_free(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (!g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d))
        return false;
    }
  }
  return true;
}

}  // namespace intervallabel
