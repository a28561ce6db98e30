#pragma once

#include <vector>

#include "intervallabel/graph.hpp"
#include "intervallabel/representation.hpp"
#include "oracle.hpp"

namespace fixtures {

using namespace intervallabel;

// a..e = 0..4
inline IntervalKRep sample_k3() {
  return IntervalKRep{{{1, 9}, {0, 4}, {6, 11}, {2, 7}, {3, 8}}, {1, 2, 2, 3, 3}, 3};
}

inline std::vector<Edge> sample_k3_edges() {
  return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
}

// center, then leaves
inline IntervalRep interval_star() { return IntervalRep{{{0, 10}, {1, 2}, {4, 5}, {7, 8}}}; }

// c, x, y, z: c precedes every leaf, leaves pairwise overlap
inline IntervalOrderRep order_star() { return IntervalOrderRep{{{0, 1}, {2, 4}, {3, 5}, {2, 5}}}; }

// Twelve arcs on a 360-unit circle.
inline CircularArcRep twelve_arcs() {
  return CircularArcRep{{{20, 70},
                         {120, 170},
                         {200, 250},
                         {290, 340},
                         {40, 100},
                         {140, 190},
                         {210, 270},
                         {310, 10},
                         {80, 130},
                         {160, 230},
                         {250, 330},
                         {350, 65}},
                        360};
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return build_graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return build_graph(leaves + 1, e);
}

inline oracle::Matrix matrix(const Graph& g) {
  oracle::Matrix a = oracle::empty_matrix(g.n());
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline const std::vector<RepClass>& all_classes() {
  static const std::vector<RepClass> classes{RepClass::kInterval, RepClass::kIntervalK,
                                             RepClass::kCircularArc, RepClass::kContainment,
                                             RepClass::kIntervalOrder};
  return classes;
}

}  // namespace fixtures
