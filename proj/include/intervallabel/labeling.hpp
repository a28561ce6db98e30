#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intervallabel/graph.hpp"
#include "intervallabel/representation.hpp"

namespace intervallabel {

using Label = std::int64_t;

// Separation required between adjacent vertices (p) and between vertices at
// distance two (q). Both must be at least 1.
struct LpqParams {
  int p = 2;
  int q = 1;

  int max_pq() const noexcept { return p > q ? p : q; }
  void validate() const;
};

struct Labeling {
  std::vector<Label> labels;
  LpqParams params;
  std::string algorithm;
  // The order vertices were labeled in, kept so a run can be replayed.
  std::vector<Vertex> ordering;
  // Circular-arc labelings only: the clique tail labeled above the line part.
  std::vector<Vertex> clique_tail;

  // Largest minus smallest label; 0 for an empty labeling.
  Label span() const;
};

// Greedy first-fit L(p,q) labeling along `ordering`. Throws
// Error(kInvalidArgument) when ordering is not a permutation of 0..n-1.
Labeling greedy_lpq(const Graph& g, std::span<const Vertex> ordering, LpqParams params);

// Stable partition: vertices of degree != 1 first, then degree-1 vertices.
std::vector<Vertex> defer_degree_one(const Graph& g, std::span<const Vertex> base);

Labeling label_interval_k(const IntervalKRep& rep, LpqParams params);
// Labels are multiples of max(p, q).
Labeling label_interval(const IntervalRep& rep, LpqParams params);
// Cuts at the least-covered point unless `cut_twice` (2·A) is given.
Labeling label_circular_arc(const CircularArcRep& rep, LpqParams params,
                            std::optional<std::int64_t> cut_twice = std::nullopt);
Labeling label_permutation(const ContainmentRep& rep, LpqParams params);
Labeling label_cointerval(const IntervalOrderRep& rep, LpqParams params);

// Dispatches to the class-specific labeler.
Labeling label_instance(const Representation& rep, LpqParams params);

// Closed-form span bound for the class. `clique_size` stands in for ω on
// circular-arc graphs when stats.omega is absent. Throws
// Error(kInvalidArgument) if the circular-arc case has neither.
std::int64_t class_bound(RepClass cls, LpqParams params, const GraphStats& stats,
                         std::optional<int> clique_size = std::nullopt);

// max{p,q}·Δ + max{p,q} + p·(|C| − 1): what the split construction guarantees.
std::int64_t circular_construction_bound(LpqParams params, int max_degree, int clique_size);

// Labeling file (JSON). parse throws Error(kParse) / Error(kInvalidArgument).
std::string serialize_labeling(const Labeling& lab);
Labeling parse_labeling(std::string_view text);

}  // namespace intervallabel
