#include "intervallabel/labeling.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

#include "intervallabel/error.hpp"

namespace intervallabel {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); }

void check_permutation(std::span<const Vertex> ordering, int n) {
  if (static_cast<int>(ordering.size()) != n) {
    invalid("ordering has " + std::to_string(ordering.size()) + " entries, graph has " +
            std::to_string(n) + " vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : ordering) {
    if (v < 0 || v >= n) invalid("ordering entry " + std::to_string(v) + " out of range");
    if (seen[v]) invalid("ordering repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
}

constexpr Label kUnlabeled = -1;

struct Forbidden {
  Label lo;
  Label hi;
};

// Smallest j >= 0 outside every [lo, hi] range.
Label first_free(std::vector<Forbidden>& ranges) {
  std::sort(ranges.begin(), ranges.end(),
            [](const Forbidden& a, const Forbidden& b) { return a.lo < b.lo; });
  Label j = 0;
  for (const auto& r : ranges) {
    if (r.lo > j) break;
    j = std::max(j, r.hi + 1);
  }
  return j;
}

// First-fit over labels restricted to multiples of `step`; a candidate is
// blocked when it equals the label of any labeled vertex within distance two.
// Only vertices listed in `ordering` are labeled.
void label_multiples(const Graph& g, const Distance2Index& d2, std::span<const Vertex> ordering,
                     Label step, std::vector<Label>& labels) {
  std::vector<Label> taken;
  for (Vertex v : ordering) {
    taken.clear();
    for (Vertex u : g.neighbors(v))
      if (labels[u] != kUnlabeled) taken.push_back(labels[u]);
    d2.row(v).for_each([&](std::size_t u) {
      if (labels[u] != kUnlabeled) taken.push_back(labels[u]);
    });
    std::sort(taken.begin(), taken.end());
    Label candidate = 0;
    for (Label t : taken) {
      if (t == candidate) candidate += step;
      else if (t > candidate) break;
    }
    labels[v] = candidate;
  }
}

}  // namespace

void LpqParams::validate() const {
  if (p < 1 || q < 1)
    invalid("p and q must both be >= 1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
}

Label Labeling::span() const {
  if (labels.empty()) return 0;
  auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  return *hi - *lo;
}

Labeling greedy_lpq(const Graph& g, std::span<const Vertex> ordering, LpqParams params) {
  params.validate();
  check_permutation(ordering, g.n());
  const Distance2Index d2(g);
  std::vector<Label> labels(static_cast<std::size_t>(g.n()), kUnlabeled);
  std::vector<Forbidden> ranges;
  for (Vertex v : ordering) {
    ranges.clear();
    for (Vertex u : g.neighbors(v))
      if (labels[u] != kUnlabeled) ranges.push_back({labels[u] - params.p + 1, labels[u] + params.p - 1});
    d2.row(v).for_each([&](std::size_t u) {
      if (labels[u] != kUnlabeled) ranges.push_back({labels[u] - params.q + 1, labels[u] + params.q - 1});
    });
    labels[v] = first_free(ranges);
  }
  Labeling out;
  out.labels = std::move(labels);
  out.params = params;
  out.algorithm = "greedy";
  out.ordering.assign(ordering.begin(), ordering.end());
  return out;
}

std::vector<Vertex> defer_degree_one(const Graph& g, std::span<const Vertex> base) {
  std::vector<Vertex> out(base.begin(), base.end());
  std::stable_partition(out.begin(), out.end(), [&](Vertex v) { return g.degree(v) != 1; });
  return out;
}

namespace {

template <typename Rep>
Labeling greedy_by_right_endpoint(const Rep& rep, LpqParams params, const char* algorithm) {
  const Graph g = derive_graph(rep);
  const auto order = defer_degree_one(g, rightpoint_order_desc(std::span<const Interval>(rep.intervals)));
  Labeling out = greedy_lpq(g, order, params);
  out.algorithm = algorithm;
  return out;
}

}  // namespace

Labeling label_interval_k(const IntervalKRep& rep, LpqParams params) {
  return greedy_by_right_endpoint(rep, params, "interval_k_greedy");
}

Labeling label_permutation(const ContainmentRep& rep, LpqParams params) {
  return greedy_by_right_endpoint(rep, params, "containment_greedy");
}

Labeling label_cointerval(const IntervalOrderRep& rep, LpqParams params) {
  return greedy_by_right_endpoint(rep, params, "interval_order_greedy");
}

Labeling label_interval(const IntervalRep& rep, LpqParams params) {
  params.validate();
  const Graph g = derive_graph(rep);
  const Distance2Index d2(g);
  const auto order = rightpoint_order_desc(std::span<const Interval>(rep.intervals));
  Labeling out;
  out.labels.assign(static_cast<std::size_t>(g.n()), kUnlabeled);
  label_multiples(g, d2, order, params.max_pq(), out.labels);
  out.params = params;
  out.algorithm = "interval_multiples";
  out.ordering = order;
  return out;
}

Labeling label_circular_arc(const CircularArcRep& rep, LpqParams params,
                            std::optional<std::int64_t> cut_twice) {
  params.validate();
  const Graph g = derive_graph(rep);
  const Distance2Index d2(g);
  const CircularSplit split = cut_twice ? split_circular_at(rep, *cut_twice) : split_circular(rep);

  // Line part: right-endpoint order on the unrolled intervals, mapped back to
  // vertex ids; distance two is measured in the whole circular-arc graph.
  std::vector<Vertex> order;
  for (Vertex local : rightpoint_order_desc(std::span<const Interval>(split.line.intervals)))
    order.push_back(split.line_ids[local]);

  Labeling out;
  out.labels.assign(static_cast<std::size_t>(g.n()), kUnlabeled);
  const Label m = params.max_pq();
  label_multiples(g, d2, order, m, out.labels);

  Label next = 0;
  if (!order.empty()) {
    Label top = 0;
    for (Vertex v : order) top = std::max(top, out.labels[v]);
    next = top + m;
  }

  auto arc_length = [&](Vertex v) {
    const Arc& a = rep.arcs[v];
    std::int64_t d = (a.e - a.s) % rep.circumference;
    return d < 0 ? d + rep.circumference : d;
  };
  std::vector<Vertex> tail = split.clique_ids;
  std::stable_sort(tail.begin(), tail.end(),
                   [&](Vertex a, Vertex b) { return arc_length(a) > arc_length(b); });
  for (Vertex v : tail) {
    out.labels[v] = next;
    next += params.p;
  }

  out.params = params;
  out.algorithm = "circular_arc_split";
  out.ordering = order;
  out.ordering.insert(out.ordering.end(), tail.begin(), tail.end());
  out.clique_tail = std::move(tail);
  return out;
}

Labeling label_instance(const Representation& rep, LpqParams params) {
  return std::visit(
      [&](const auto& r) -> Labeling {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, IntervalRep>) return label_interval(r, params);
        else if constexpr (std::is_same_v<T, IntervalKRep>) return label_interval_k(r, params);
        else if constexpr (std::is_same_v<T, CircularArcRep>) return label_circular_arc(r, params);
        else if constexpr (std::is_same_v<T, ContainmentRep>) return label_permutation(r, params);
        else return label_cointerval(r, params);
      },
      rep);
}

std::int64_t class_bound(RepClass cls, LpqParams params, const GraphStats& stats,
                         std::optional<int> clique_size) {
  params.validate();
  const std::int64_t p = params.p;
  const std::int64_t q = params.q;
  const std::int64_t m = params.max_pq();
  const std::int64_t delta = stats.max_degree;
  const std::int64_t mu = stats.multiplicity;
  switch (cls) {
    case RepClass::kIntervalK:
      return std::max(2 * (p + q - 1) * delta - 4 * q + 2,
                      (2 * p - 1) * mu + (2 * q - 1) * delta - 2 * q + 1);
    case RepClass::kInterval:
      return m * delta;
    case RepClass::kCircularArc: {
      std::optional<int> omega = stats.omega ? stats.omega : clique_size;
      if (!omega) invalid("circular-arc bound needs the clique number");
      return m * delta + p * *omega;
    }
    case RepClass::kContainment:
      return 2 * (p + q - 1) * delta - 2 * q + 1;
    case RepClass::kIntervalOrder:
      return (2 * p - 1) * delta + (2 * q - 1) * (mu - 1);
  }
  invalid("unknown class");
}

std::int64_t circular_construction_bound(LpqParams params, int max_degree, int clique_size) {
  const std::int64_t m = params.max_pq();
  return m * max_degree + m + static_cast<std::int64_t>(params.p) * (clique_size - 1);
}

std::string serialize_labeling(const Labeling& lab) {
  nlohmann::json doc;
  doc["p"] = lab.params.p;
  doc["q"] = lab.params.q;
  doc["variant"] = "L1";
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t v = 0; v < lab.labels.size(); ++v) labels[std::to_string(v)] = lab.labels[v];
  doc["labels"] = std::move(labels);
  doc["span"] = lab.span();
  doc["algorithm"] = lab.algorithm;
  doc["ordering"] = lab.ordering;
  if (!lab.clique_tail.empty()) doc["clique_tail"] = lab.clique_tail;
  return doc.dump(2) + "\n";
}

Labeling parse_labeling(std::string_view text) {
  auto fail = [](const std::string& msg) -> void { throw Error(ErrorCode::kParse, msg); };
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed labeling document: ") + e.what());
  }
  if (!doc.is_object()) fail("labeling document must be a JSON object");
  for (const char* key : {"p", "q"})
    if (!doc.contains(key) || !doc[key].is_number_integer())
      fail(std::string("labeling: missing integer field \"") + key + "\"");
  if (!doc.contains("labels") || !doc["labels"].is_object())
    fail("labeling: missing object field \"labels\"");

  Labeling lab;
  lab.params = {doc["p"].get<int>(), doc["q"].get<int>()};
  const auto& labels = doc["labels"];
  lab.labels.assign(labels.size(), kUnlabeled);
  for (const auto& [key, value] : labels.items()) {
    std::size_t pos = 0;
    long id = -1;
    try {
      id = std::stol(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || id < 0 || static_cast<std::size_t>(id) >= lab.labels.size())
      fail("labeling: label key \"" + key + "\" is not a vertex id in 0.." +
           std::to_string(lab.labels.size() - 1));
    if (!value.is_number_integer() || value.get<Label>() < 0)
      fail("labeling: label of vertex " + key + " must be a non-negative integer");
    lab.labels[id] = value.get<Label>();
  }
  if (doc.contains("algorithm") && doc["algorithm"].is_string())
    lab.algorithm = doc["algorithm"].get<std::string>();
  if (doc.contains("ordering") && doc["ordering"].is_array())
    lab.ordering = doc["ordering"].get<std::vector<Vertex>>();
  if (doc.contains("clique_tail") && doc["clique_tail"].is_array())
    lab.clique_tail = doc["clique_tail"].get<std::vector<Vertex>>();
  lab.params.validate();
  return lab;
}

}  // namespace intervallabel
