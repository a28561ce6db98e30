#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "intervallabel/graph.hpp"

namespace intervallabel {

// Closed interval [l, r] with integer endpoints.
struct Interval {
  std::int64_t l = 0;
  std::int64_t r = 0;

  bool intersects(const Interval& o) const noexcept {
    return std::max(l, o.l) <= std::min(r, o.r);
  }
  bool contains(const Interval& o) const noexcept { return l <= o.l && o.r <= r; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Intersection model of an interval graph.
struct IntervalRep {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalRep&, const IntervalRep&) = default;
};

// Interval k-representation: intersecting intervals are adjacent only when
// their class indices (1..k) differ.
struct IntervalKRep {
  std::vector<Interval> intervals;
  std::vector<int> classes;
  int k = 2;
  friend bool operator==(const IntervalKRep&, const IntervalKRep&) = default;
};

// Closed arc running clockwise from s to e, wrapping past 0 when e < s.
struct Arc {
  std::int64_t s = 0;
  std::int64_t e = 0;

  bool contains_point(std::int64_t x) const noexcept {
    return s <= e ? (s <= x && x <= e) : (x >= s || x <= e);
  }
  bool intersects(const Arc& o) const noexcept {
    return contains_point(o.s) || o.contains_point(s);
  }
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct CircularArcRep {
  std::vector<Arc> arcs;
  std::int64_t circumference = 0;
  friend bool operator==(const CircularArcRep&, const CircularArcRep&) = default;
};

// Permutation graph in containment form: adjacency is nesting. All 2n
// endpoints are pairwise distinct.
struct ContainmentRep {
  std::vector<Interval> intervals;
  friend bool operator==(const ContainmentRep&, const ContainmentRep&) = default;
};

// Interval order: x precedes y iff r(x) < l(y). The derived graph is its
// comparability graph (a cointerval graph).
struct IntervalOrderRep {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalOrderRep&, const IntervalOrderRep&) = default;
};

using Representation =
    std::variant<IntervalRep, IntervalKRep, CircularArcRep, ContainmentRep, IntervalOrderRep>;

enum class RepClass { kInterval, kIntervalK, kCircularArc, kContainment, kIntervalOrder };

RepClass rep_class(const Representation& rep);
std::string_view class_name(RepClass c);
// Throws Error(kInvalidArgument) for an unknown tag.
RepClass parse_class_name(std::string_view name);

int vertex_count(const Representation& rep);

// Throws Error(kInvalidArgument) naming the first offending vertex.
void validate_rep(const Representation& rep);

Graph derive_graph(const Representation& rep);

// Vertices by non-increasing right endpoint, ties by ascending id. Circular
// arcs have no line order and raise Error(kNotApplicable).
std::vector<Vertex> rightpoint_order_desc(const Representation& rep);
std::vector<Vertex> rightpoint_order_desc(std::span<const Interval> intervals);

// Result of cutting a circular-arc model at a point A. Points are expressed
// in half units (2·A) so that gaps between integer endpoints are addressable.
struct CircularSplit {
  std::int64_t cut_twice = 0;
  // Arcs not containing A, unrolled onto the line starting at A. Endpoints
  // are in half units.
  IntervalRep line;
  // line.intervals[i] belongs to vertex line_ids[i].
  std::vector<Vertex> line_ids;
  // Arcs containing A, ascending id.
  std::vector<Vertex> clique_ids;
};

// Cuts at the point covered by the fewest arcs (smallest coordinate on ties).
CircularSplit split_circular(const CircularArcRep& rep);
// Cuts at the given point, expressed as 2·A in [0, 2·circumference).
CircularSplit split_circular_at(const CircularArcRep& rep, std::int64_t cut_twice);

// v is minimal iff no u has r(u) < l(v). Ascending id.
std::vector<Vertex> minimal_elements(const IntervalOrderRep& rep);

struct GenParams {
  // Endpoint range [range_lo, range_hi]; range_hi < range_lo selects the
  // default [0, 4n].
  std::int64_t range_lo = 0;
  std::int64_t range_hi = -1;
  int k = 3;
  // 0 selects 4n.
  std::int64_t circumference = 0;
  // Upper bound on interval length (arc length for arcs). 0 means
  // unbounded: both endpoints are drawn uniformly.
  std::int64_t max_length = 0;
};

// Deterministic for a fixed (class, n, seed, params) on a given toolchain.
Representation gen_instance(RepClass cls, int n, std::uint64_t seed, const GenParams& params = {});

// JSON instance documents. Parse errors raise Error(kParse) with context;
// invariant violations raise Error(kInvalidArgument).
Representation parse_instance(std::string_view text);
std::string serialize_instance(const Representation& rep);

}  // namespace intervallabel
