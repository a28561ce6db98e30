#include "intervallabel/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "intervallabel/error.hpp"

namespace intervallabel {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kL1: return "L1";
    case Variant::kL2: return "L2";
    case Variant::kL3: return "L3";
  }
  return "L1";
}

Variant parse_variant(std::string_view name) {
  if (name == "L1") return Variant::kL1;
  if (name == "L2") return Variant::kL2;
  if (name == "L3") return Variant::kL3;
  throw Error(ErrorCode::kInvalidArgument, "unknown variant \"" + std::string(name) + "\"");
}

std::string_view violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::kAdjacent: return "adjacent";
    case ViolationKind::kDistance2: return "distance2";
    case ViolationKind::kCommonNeighbor: return "common-neighbor";
  }
  return "adjacent";
}

std::vector<Violation> validate(const Graph& g, const Labeling& lab, LpqParams params,
                                Variant variant) {
  params.validate();
  if (lab.labels.size() != static_cast<std::size_t>(g.n())) {
    throw Error(ErrorCode::kInvalidArgument,
                "labeling covers " + std::to_string(lab.labels.size()) + " vertices, graph has " +
                    std::to_string(g.n()));
  }
  for (std::size_t v = 0; v < lab.labels.size(); ++v)
    if (lab.labels[v] < 0)
      throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " has no label");

  const Distance2Index d2(g);
  std::vector<Violation> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const std::int64_t diff = std::llabs(lab.labels[u] - lab.labels[v]);
      const bool adjacent = g.adjacent(u, v);
      if (adjacent && diff < params.p)
        out.push_back({ViolationKind::kAdjacent, u, v, params.p, diff});
      if (diff >= params.q) continue;
      switch (variant) {
        case Variant::kL1:
          if (d2.at_distance_two(u, v)) out.push_back({ViolationKind::kDistance2, u, v, params.q, diff});
          break;
        case Variant::kL2:
          if (g.neighbor_row(u).intersects(g.neighbor_row(v)))
            out.push_back({ViolationKind::kCommonNeighbor, u, v, params.q, diff});
          break;
        case Variant::kL3:
          if (adjacent || d2.at_distance_two(u, v))
            out.push_back({ViolationKind::kDistance2, u, v, params.q, diff});
          break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact lambda

namespace {

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + ": instance too large (n=" +
                                          std::to_string(g.n()) + " > cap " + std::to_string(cap) +
                                          "); raise the cap to force an exact search");
  }
}

// Exact span search for one connected graph on at most 16 vertices.
//
// Any labeling, read in increasing label order, is a vertex ordering; giving
// each vertex in that order the smallest label compatible with the vertices
// before it never increases a label. So the minimum span is the smallest
// final label over all orderings under earliest placement. Vertices sharing
// a label are taken in increasing id. The search state is the placed set
// plus the labels of placed vertices close enough to the current label to
// still matter; states that failed are remembered.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, LpqParams params)
      : n_(g.n()), window_(params.max_pq()), sep_(static_cast<std::size_t>(n_ * n_), 0) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (u != v) sep_[u * n_ + v] = g.adjacent(u, v) ? params.p : 0;
    const Distance2Index d2(g);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (d2.at_distance_two(u, v)) sep_[u * n_ + v] = params.q;
    build_bounds();
  }

  // Lower bound for the whole graph.
  std::int64_t lower_bound() const { return subset_bound_.back(); }

  bool feasible(std::int64_t span) {
    span_ = span;
    failed_.clear();
    labels_.assign(static_cast<std::size_t>(n_), 0);
    return place(0, 0);
  }

 private:
  // Vertices pairwise within distance two get pairwise separated labels, so
  // the cheapest path through such a set, weighted by separations, bounds the
  // spread of its labels. subset_bound_[mask] is the best such bound over
  // the cliques of G² inside mask.
  void build_bounds() {
    constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();
    const std::size_t states = std::size_t{1} << n_;
    const std::size_t width = static_cast<std::size_t>(n_);
    std::vector<std::int64_t> path(states * width, kUnset);
    std::vector<char> clique(states, 0);
    subset_bound_.assign(states, 0);
    for (Vertex v = 0; v < n_; ++v) path[(std::size_t{1} << v) * width + v] = 0;
    clique[0] = 1;
    for (std::size_t mask = 1; mask < states; ++mask) {
      const int low = std::countr_zero(mask);
      const std::size_t rest = mask & (mask - 1);
      bool joined = clique[rest] != 0;
      for (std::size_t r = rest; r && joined; r &= r - 1)
        joined = sep_[low * n_ + std::countr_zero(r)] > 0;
      clique[mask] = joined;

      std::int64_t best = 0;
      for (std::size_t r = mask; r; r &= r - 1)
        best = std::max(best, subset_bound_[mask & ~(std::size_t{1} << std::countr_zero(r))]);
      if (joined) {
        std::int64_t cheapest = kUnset;
        for (Vertex last = 0; last < n_; ++last) {
          const std::int64_t here = path[mask * width + last];
          if (here == kUnset) continue;
          cheapest = std::min(cheapest, here);
          for (Vertex next = 0; next < n_; ++next) {
            if ((mask >> next & 1) || sep_[last * n_ + next] == 0) continue;
            auto& slot = path[(mask | std::size_t{1} << next) * width + next];
            slot = std::min<std::int64_t>(slot, here + sep_[last * n_ + next]);
          }
        }
        best = std::max(best, cheapest);
      }
      subset_bound_[mask] = best;
    }
  }

  std::string state_key(std::uint32_t mask, std::int64_t current) const {
    std::string key(reinterpret_cast<const char*>(&mask), sizeof(mask));
    for (Vertex u = 0; u < n_; ++u) {
      if (!(mask >> u & 1) || current - labels_[u] >= window_) continue;
      const auto gap = static_cast<std::int32_t>(current - labels_[u]);
      key.push_back(static_cast<char>(u));
      key.append(reinterpret_cast<const char*>(&gap), sizeof(gap));
    }
    return key;
  }

  bool place(std::uint32_t mask, std::int64_t current) {
    const std::uint32_t full = n_ == 32 ? ~0u : (1u << n_) - 1;
    if (mask == full) return true;
    const std::uint32_t rest = full & ~mask;
    if (current + subset_bound_[rest] > span_) return false;

    const std::string key = state_key(mask, current);
    if (auto it = failed_.find(key); it != failed_.end() && it->second <= current) return false;

    Vertex top_at_current = -1;
    for (Vertex u = 0; u < n_; ++u)
      if ((mask >> u & 1) && labels_[u] == current) top_at_current = u;

    for (std::uint32_t r = rest; r; r &= r - 1) {
      const Vertex v = std::countr_zero(r);
      std::int64_t earliest = current;
      for (std::uint32_t m = mask; m; m &= m - 1) {
        const Vertex u = std::countr_zero(m);
        earliest = std::max(earliest, labels_[u] + sep_[u * n_ + v]);
      }
      if (earliest > span_) continue;
      if (earliest == current && mask != 0 && v < top_at_current) continue;
      labels_[v] = earliest;
      if (place(mask | 1u << v, earliest)) return true;
    }

    auto [it, fresh] = failed_.try_emplace(key, current);
    if (!fresh) it->second = std::min(it->second, current);
    return false;
  }

  int n_;
  int window_;
  std::vector<int> sep_;
  std::vector<std::int64_t> subset_bound_;
  std::vector<std::int64_t> labels_;
  std::unordered_map<std::string, std::int64_t> failed_;
  std::int64_t span_ = 0;
};

inline constexpr int kMaxComponent = 16;

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::int64_t component_lambda(const Graph& g, LpqParams params) {
  if (g.n() <= 1) return 0;
  if (g.n() > kMaxComponent) {
    throw Error(ErrorCode::kTooLarge, "exact_lambda: connected component with " +
                                          std::to_string(g.n()) + " vertices exceeds the search limit of " +
                                          std::to_string(kMaxComponent));
  }
  std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  const std::int64_t upper = greedy_lpq(g, order, params).span();

  OrderSearch search(g, params);
  for (std::int64_t s = search.lower_bound(); s < upper; ++s)
    if (search.feasible(s)) return s;
  return upper;
}

}  // namespace

std::int64_t exact_lambda(const Graph& g, LpqParams params, int n_cap) {
  params.validate();
  require_cap(g, n_cap, "exact_lambda");
  std::int64_t best = 0;
  for (const auto& comp : components(g))
    best = std::max(best, component_lambda(induced_subgraph(g, comp), params));
  return best;
}

// ---------------------------------------------------------------------------
// Exact chromatic number of the square

namespace {

// DSATUR backtracking: decides k-colorability.
class Colorer {
 public:
  explicit Colorer(const Graph& h) : h_(h), color_(static_cast<std::size_t>(h.n()), -1) {}

  bool colorable(int k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), -1);
    return extend(0);
  }

 private:
  bool extend(int colored) {
    if (colored == h_.n()) return true;
    int pick = -1;
    int best_sat = -1;
    for (Vertex v = 0; v < h_.n(); ++v) {
      if (color_[v] >= 0) continue;
      int sat = saturation(v);
      if (sat > best_sat || (sat == best_sat && h_.degree(v) > h_.degree(pick))) {
        pick = v;
        best_sat = sat;
      }
    }
    // A fresh color is interchangeable with any other unused one, so only
    // the lowest unused color is tried.
    int used = 0;
    for (int c : color_) used = std::max(used, c + 1);
    for (int c = 0; c < std::min(k_, used + 1); ++c) {
      bool ok = true;
      for (Vertex u : h_.neighbors(pick))
        if (color_[u] == c) ok = false;
      if (!ok) continue;
      color_[pick] = c;
      if (extend(colored + 1)) return true;
      color_[pick] = -1;
    }
    return false;
  }

  int saturation(Vertex v) const {
    std::vector<char> seen(static_cast<std::size_t>(k_), 0);
    int sat = 0;
    for (Vertex u : h_.neighbors(v)) {
      int c = color_[u];
      if (c >= 0 && !seen[c]) {
        seen[c] = 1;
        ++sat;
      }
    }
    return sat;
  }

  const Graph& h_;
  std::vector<int> color_;
  int k_ = 0;
};

}  // namespace

int chi_square_exact(const Graph& g, int n_cap) {
  require_cap(g, n_cap, "chi_square_exact");
  if (g.n() == 0) return 0;
  const Graph h = square(g);
  Colorer colorer(h);
  for (int k = 1; k <= h.n(); ++k)
    if (colorer.colorable(k)) return k;
  return h.n();
}

// ---------------------------------------------------------------------------
// Bound reports

BoundReport bound_report(const Representation& rep, const Labeling& lab, int omega_cap) {
  const Graph g = derive_graph(rep);
  if (lab.labels.size() != static_cast<std::size_t>(g.n()))
    throw Error(ErrorCode::kInvalidArgument, "labeling does not match the instance's vertex count");

  BoundReport r;
  r.cls = rep_class(rep);
  r.params = lab.params;
  r.stats = compute_stats(g, omega_cap);
  r.achieved_span = lab.span();

  std::optional<int> clique;
  if (r.cls == RepClass::kCircularArc) {
    clique = lab.algorithm == "circular_arc_split"
                 ? static_cast<int>(lab.clique_tail.size())
                 : static_cast<int>(split_circular(std::get<CircularArcRep>(rep)).clique_ids.size());
    r.clique_size = clique;
    r.construction_bound = circular_construction_bound(lab.params, r.stats.max_degree, *clique);
    r.construction_holds = r.achieved_span <= *r.construction_bound;
    if (!r.stats.omega) r.note = "lower-bound omega: split clique size used in place of omega";
  }
  r.formula_value = class_bound(r.cls, lab.params, r.stats, clique);
  r.holds = r.achieved_span <= r.formula_value;

  if (r.cls == RepClass::kIntervalOrder && lab.params.q > lab.params.p) {
    r.report_only = true;
    r.note = "report-only (known theorem gap)";
  } else if (r.stats.max_degree <= 1 && r.cls != RepClass::kCircularArc) {
    r.report_only = true;
    r.note = "report-only (known theorem gap: max degree <= 1)";
  }
  return r;
}

bool is_hard_failure(const BoundReport& report) {
  if (report.report_only) return false;
  if (report.cls == RepClass::kCircularArc) {
    if (!report.construction_holds) return true;
    return report.params.p >= report.params.q && !report.holds;
  }
  return !report.holds;
}

// ---------------------------------------------------------------------------
// Structural claims

std::string_view claim_tag(Claim c) {
  switch (c) {
    case Claim::kIntervalLemma: return "interval-lemma";
    case Claim::kContainmentNesting: return "perm-nesting";
    case Claim::kCointervalMinimal: return "cointerval-min";
    case Claim::kCointervalEquivalence: return "cointerval-equiv";
  }
  return "";
}

Claim parse_claim(std::string_view tag) {
  for (auto c : {Claim::kIntervalLemma, Claim::kContainmentNesting, Claim::kCointervalMinimal,
                 Claim::kCointervalEquivalence})
    if (claim_tag(c) == tag) return c;
  throw Error(ErrorCode::kInvalidArgument, "unknown claim \"" + std::string(tag) + "\"");
}

RepClass claim_class(Claim c) {
  switch (c) {
    case Claim::kIntervalLemma: return RepClass::kInterval;
    case Claim::kContainmentNesting: return RepClass::kContainment;
    case Claim::kCointervalMinimal:
    case Claim::kCointervalEquivalence: return RepClass::kIntervalOrder;
  }
  return RepClass::kInterval;
}

namespace {

// Neighborhoods inside the subgraph induced by `alive`.
struct InducedView {
  const Graph& g;
  const Bitset& alive;

  Bitset open(Vertex v) const {
    Bitset b = g.neighbor_row(v);
    b &= alive;
    return b;
  }
  Bitset closed(Vertex v) const {
    Bitset b = open(v);
    b.set(static_cast<std::size_t>(v));
    return b;
  }
  // Vertices within distance two of v, excluding v.
  Bitset ball2(Vertex v) const {
    Bitset b = open(v);
    open(v).for_each([&](std::size_t z) { b |= open(static_cast<Vertex>(z)); });
    b.reset(static_cast<std::size_t>(v));
    return b;
  }
};

std::vector<Vertex> members(const Bitset& b) {
  std::vector<Vertex> out;
  b.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

std::string list(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

// The greedy algorithms label vertices by decreasing right endpoint, so each
// step faces the induced subgraph on the vertices labeled so far, where the
// current vertex has the minimum right endpoint. Both line claims are checked
// at every such step; the last step is the whole graph.
template <typename StepCheck>
void for_each_step(const Graph& g, std::span<const Interval> intervals, StepCheck&& check) {
  Bitset alive(static_cast<std::size_t>(g.n()));
  for (Vertex v : rightpoint_order_desc(intervals)) {
    alive.set(static_cast<std::size_t>(v));
    check(InducedView{g, alive}, v);
  }
}

Vertex argmax_right(const Bitset& set, std::span<const Interval> intervals) {
  Vertex best = -1;
  set.for_each([&](std::size_t x) {
    Vertex v = static_cast<Vertex>(x);
    if (best < 0 || intervals[v].r > intervals[best].r) best = v;
  });
  return best;
}

ClaimCheck check_interval_lemma(const IntervalRep& rep) {
  const Graph g = derive_graph(rep);
  ClaimCheck out;
  for_each_step(g, rep.intervals, [&](const InducedView& view, Vertex v) {
    const Bitset nbrs = view.open(v);
    if (nbrs.none()) return;
    const Vertex w = argmax_right(nbrs, rep.intervals);
    Bitset outside = view.ball2(v);
    Bitset target = view.closed(w);
    target.reset(static_cast<std::size_t>(v));
    outside.subtract(target);
    if (outside.any()) {
      auto extra = members(outside);
      out.witnesses.push_back({v, w, extra.front()});
      out.details.push_back("vertex " + std::to_string(v) + ": square neighbors " + list(extra) +
                            " outside N[" + std::to_string(w) + "]");
    }
  });
  return out;
}

ClaimCheck check_containment_nesting(const ContainmentRep& rep) {
  const Graph g = derive_graph(rep);
  ClaimCheck out;
  for_each_step(g, rep.intervals, [&](const InducedView& view, Vertex v1) {
    std::vector<Vertex> nbrs = members(view.open(v1));
    if (nbrs.empty()) return;
    std::sort(nbrs.begin(), nbrs.end(),
              [&](Vertex a, Vertex b) { return rep.intervals[a].r < rep.intervals[b].r; });
    const Bitset closed_v1 = view.closed(v1);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      Bitset far = view.open(nbrs[j]);
      far.subtract(closed_v1);
      for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
        Bitset missing = far;
        missing.subtract(view.open(nbrs[k]));
        if (missing.any()) {
          out.witnesses.push_back({v1, nbrs[j], nbrs[k], members(missing).front()});
          out.details.push_back("nesting fails at v1=" + std::to_string(v1) + " for neighbors " +
                                std::to_string(nbrs[j]) + " < " + std::to_string(nbrs[k]));
        }
      }
    }
    Bitset second = view.ball2(v1);
    second.subtract(closed_v1);
    second.subtract(view.open(nbrs.back()));
    if (second.any()) {
      out.witnesses.push_back({v1, nbrs.back(), members(second).front()});
      out.details.push_back("distance-2 vertices of " + std::to_string(v1) + " not adjacent to " +
                            std::to_string(nbrs.back()));
    }
  });
  return out;
}

ClaimCheck check_cointerval_minimal(const IntervalOrderRep& rep) {
  const Graph g = derive_graph(rep);
  ClaimCheck out;
  if (g.n() == 0) return out;
  const auto minimal = minimal_elements(rep);
  Bitset is_min(static_cast<std::size_t>(g.n()));
  for (Vertex v : minimal) is_min.set(static_cast<std::size_t>(v));

  Vertex v1 = 0;
  for (Vertex v = 1; v < g.n(); ++v)
    if (rep.intervals[v].r < rep.intervals[v1].r) v1 = v;
  if (!is_min.test(static_cast<std::size_t>(v1))) {
    out.witnesses.push_back({v1});
    out.details.push_back("vertex " + std::to_string(v1) + " has minimum right endpoint but is not minimal");
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!is_min.test(static_cast<std::size_t>(u)) && !g.adjacent(v1, u)) {
      out.witnesses.push_back({v1, u});
      out.details.push_back("non-minimal " + std::to_string(u) + " not adjacent to " + std::to_string(v1));
    }
  }

  const GraphStats stats = compute_stats(g);
  if (stats.min_degree < 2 || minimal.size() < 2) {
    out.applicable = false;
    return out;
  }
  Vertex w = minimal.front();
  for (Vertex v : minimal)
    if (rep.intervals[v].r > rep.intervals[w].r) w = v;
  for (Vertex a : g.neighbors(w)) {
    Bitset missing = is_min;
    missing.subtract(g.neighbor_row(a));
    if (missing.any()) {
      out.witnesses.push_back({w, a, members(missing).front()});
      out.details.push_back("Min(P) not inside N(" + std::to_string(a) + ")");
    }
  }
  return out;
}

ClaimCheck check_cointerval_equivalence(const IntervalOrderRep& rep) {
  const Graph g = derive_graph(rep);
  ClaimCheck out;
  const Graph comp = complement(g);
  const Graph intersections = derive_graph(IntervalRep{rep.intervals});
  if (!(comp == intersections)) {
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (comp.adjacent(u, v) != intersections.adjacent(u, v)) {
          out.witnesses.push_back({u, v});
          out.details.push_back("complement edge mismatch on pair (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
        }
  }
  if (!is_2k2_free(g)) {
    out.witnesses.push_back({});
    out.details.push_back("derived graph contains an induced 2K2");
  }
  return out;
}

}  // namespace

ClaimCheck check_claim(Claim claim, const Representation& rep) {
  if (rep_class(rep) != claim_class(claim)) {
    throw Error(ErrorCode::kNotApplicable, "claim \"" + std::string(claim_tag(claim)) +
                                               "\" is not applicable to class " +
                                               std::string(class_name(rep_class(rep))));
  }
  switch (claim) {
    case Claim::kIntervalLemma: return check_interval_lemma(std::get<IntervalRep>(rep));
    case Claim::kContainmentNesting: return check_containment_nesting(std::get<ContainmentRep>(rep));
    case Claim::kCointervalMinimal: return check_cointerval_minimal(std::get<IntervalOrderRep>(rep));
    case Claim::kCointervalEquivalence:
      return check_cointerval_equivalence(std::get<IntervalOrderRep>(rep));
  }
  return {};
}

std::vector<std::pair<Claim, ClaimCheck>> check_structural_claims(const Representation& rep) {
  std::vector<std::pair<Claim, ClaimCheck>> out;
  for (auto c : {Claim::kIntervalLemma, Claim::kContainmentNesting, Claim::kCointervalMinimal,
                 Claim::kCointervalEquivalence})
    if (claim_class(c) == rep_class(rep)) out.emplace_back(c, check_claim(c, rep));
  return out;
}

void ClaimReport::add(std::uint64_t seed, const ClaimCheck& check) {
  if (check.applicable) ++instances_checked;
  else ++not_applicable;
  for (std::size_t i = 0; i < check.witnesses.size(); ++i)
    violations.push_back({seed, check.witnesses[i], check.details[i]});
}

}  // namespace intervallabel
