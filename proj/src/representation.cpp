#include "intervallabel/representation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "json.hpp"

#include "intervallabel/error.hpp"

namespace intervallabel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); }

std::string vertex_tag(std::size_t v) { return "vertex " + std::to_string(v); }

void validate_intervals(const std::vector<Interval>& intervals, bool strict) {
  for (std::size_t v = 0; v < intervals.size(); ++v) {
    const auto& iv = intervals[v];
    if (strict ? iv.l >= iv.r : iv.l > iv.r) {
      invalid(vertex_tag(v) + ": left endpoint " + std::to_string(iv.l) +
              (strict ? " must be < " : " must be <= ") + "right endpoint " + std::to_string(iv.r));
    }
  }
}

void validate(const IntervalRep& rep) { validate_intervals(rep.intervals, false); }

void validate(const IntervalKRep& rep) {
  if (rep.k < 2) invalid("interval_k: k must be >= 2, got " + std::to_string(rep.k));
  if (rep.classes.size() != rep.intervals.size())
    invalid("interval_k: class list size does not match vertex count");
  validate_intervals(rep.intervals, false);
  for (std::size_t v = 0; v < rep.classes.size(); ++v) {
    if (rep.classes[v] < 1 || rep.classes[v] > rep.k) {
      invalid(vertex_tag(v) + ": class " + std::to_string(rep.classes[v]) + " outside 1.." +
              std::to_string(rep.k));
    }
  }
}

void validate(const CircularArcRep& rep) {
  if (rep.circumference < 2)
    invalid("circular_arc: circumference must be >= 2, got " + std::to_string(rep.circumference));
  for (std::size_t v = 0; v < rep.arcs.size(); ++v) {
    const auto& a = rep.arcs[v];
    if (a.s < 0 || a.s >= rep.circumference || a.e < 0 || a.e >= rep.circumference)
      invalid(vertex_tag(v) + ": arc endpoints must lie in [0, circumference)");
    if (a.s == a.e) invalid(vertex_tag(v) + ": arc start equals arc end");
  }
}

void validate(const ContainmentRep& rep) {
  validate_intervals(rep.intervals, true);
  std::vector<std::pair<std::int64_t, std::size_t>> points;
  points.reserve(rep.intervals.size() * 2);
  for (std::size_t v = 0; v < rep.intervals.size(); ++v) {
    points.emplace_back(rep.intervals[v].l, v);
    points.emplace_back(rep.intervals[v].r, v);
  }
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].first == points[i - 1].first) {
      invalid(vertex_tag(points[i].second) + ": endpoint " + std::to_string(points[i].first) +
              " is shared with " + vertex_tag(points[i - 1].second));
    }
  }
}

void validate(const IntervalOrderRep& rep) { validate_intervals(rep.intervals, false); }

template <typename Pred>
Graph graph_from_pairs(int n, Pred&& adjacent) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Whether the arc covers the half-unit point t2 (even: an integer point,
// odd: the open gap between two integers).
bool covers_twice(const Arc& a, std::int64_t t2) {
  if (t2 % 2 == 0) return a.contains_point(t2 / 2);
  std::int64_t x = (t2 - 1) / 2;
  return a.contains_point(x) && x != a.e;
}

}  // namespace

RepClass rep_class(const Representation& rep) {
  return std::visit(overloaded{
                        [](const IntervalRep&) { return RepClass::kInterval; },
                        [](const IntervalKRep&) { return RepClass::kIntervalK; },
                        [](const CircularArcRep&) { return RepClass::kCircularArc; },
                        [](const ContainmentRep&) { return RepClass::kContainment; },
                        [](const IntervalOrderRep&) { return RepClass::kIntervalOrder; },
                    },
                    rep);
}

std::string_view class_name(RepClass c) {
  switch (c) {
    case RepClass::kInterval: return "interval";
    case RepClass::kIntervalK: return "interval_k";
    case RepClass::kCircularArc: return "circular_arc";
    case RepClass::kContainment: return "containment";
    case RepClass::kIntervalOrder: return "interval_order";
  }
  return "unknown";
}

RepClass parse_class_name(std::string_view name) {
  for (auto c : {RepClass::kInterval, RepClass::kIntervalK, RepClass::kCircularArc,
                 RepClass::kContainment, RepClass::kIntervalOrder}) {
    if (class_name(c) == name) return c;
  }
  invalid("unknown class tag \"" + std::string(name) + "\"");
}

int vertex_count(const Representation& rep) {
  return std::visit(overloaded{
                        [](const CircularArcRep& r) { return static_cast<int>(r.arcs.size()); },
                        [](const auto& r) { return static_cast<int>(r.intervals.size()); },
                    },
                    rep);
}

void validate_rep(const Representation& rep) {
  std::visit([](const auto& r) { validate(r); }, rep);
}

Graph derive_graph(const Representation& rep) {
  validate_rep(rep);
  const int n = vertex_count(rep);
  return std::visit(
      overloaded{
          [n](const IntervalRep& r) {
            return graph_from_pairs(
                n, [&](Vertex u, Vertex v) { return r.intervals[u].intersects(r.intervals[v]); });
          },
          [n](const IntervalKRep& r) {
            return graph_from_pairs(n, [&](Vertex u, Vertex v) {
              return r.classes[u] != r.classes[v] && r.intervals[u].intersects(r.intervals[v]);
            });
          },
          [n](const CircularArcRep& r) {
            return graph_from_pairs(
                n, [&](Vertex u, Vertex v) { return r.arcs[u].intersects(r.arcs[v]); });
          },
          [n](const ContainmentRep& r) {
            return graph_from_pairs(n, [&](Vertex u, Vertex v) {
              return r.intervals[u].contains(r.intervals[v]) ||
                     r.intervals[v].contains(r.intervals[u]);
            });
          },
          [n](const IntervalOrderRep& r) {
            return graph_from_pairs(n, [&](Vertex u, Vertex v) {
              return r.intervals[u].r < r.intervals[v].l || r.intervals[v].r < r.intervals[u].l;
            });
          },
      },
      rep);
}

std::vector<Vertex> rightpoint_order_desc(std::span<const Interval> intervals) {
  std::vector<Vertex> order(intervals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return intervals[a].r > intervals[b].r; });
  return order;
}

std::vector<Vertex> rightpoint_order_desc(const Representation& rep) {
  return std::visit(overloaded{
                        [](const CircularArcRep&) -> std::vector<Vertex> {
                          throw Error(ErrorCode::kNotApplicable,
                                      "circular-arc models have no right-endpoint order");
                        },
                        [](const auto& r) { return rightpoint_order_desc(r.intervals); },
                    },
                    rep);
}

CircularSplit split_circular_at(const CircularArcRep& rep, std::int64_t cut_twice) {
  validate(rep);
  const std::int64_t period = 2 * rep.circumference;
  if (cut_twice < 0 || cut_twice >= period)
    invalid("cut point outside [0, 2*circumference)");
  CircularSplit out;
  out.cut_twice = cut_twice;
  for (std::size_t v = 0; v < rep.arcs.size(); ++v) {
    const Arc& a = rep.arcs[v];
    if (covers_twice(a, cut_twice)) {
      out.clique_ids.push_back(static_cast<Vertex>(v));
      continue;
    }
    std::int64_t l = mod(2 * a.s - cut_twice, period);
    std::int64_t r = l + 2 * mod(a.e - a.s, rep.circumference);
    out.line.intervals.push_back({l, r});
    out.line_ids.push_back(static_cast<Vertex>(v));
  }
  return out;
}

CircularSplit split_circular(const CircularArcRep& rep) {
  validate(rep);
  const std::int64_t period = 2 * rep.circumference;
  std::set<std::int64_t> candidates{0};
  for (const Arc& a : rep.arcs) {
    candidates.insert(mod(2 * a.s, period));
    candidates.insert(mod(2 * a.s - 1, period));
    candidates.insert(mod(2 * a.e, period));
    candidates.insert(mod(2 * a.e + 1, period));
  }
  std::int64_t best_point = 0;
  std::size_t best_cover = std::numeric_limits<std::size_t>::max();
  for (std::int64_t t : candidates) {
    std::size_t cover = 0;
    for (const Arc& a : rep.arcs) cover += covers_twice(a, t) ? 1 : 0;
    if (cover < best_cover) {
      best_cover = cover;
      best_point = t;
    }
  }
  return split_circular_at(rep, best_point);
}

std::vector<Vertex> minimal_elements(const IntervalOrderRep& rep) {
  if (rep.intervals.empty()) return {};
  std::int64_t min_right = rep.intervals.front().r;
  for (const auto& iv : rep.intervals) min_right = std::min(min_right, iv.r);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < rep.intervals.size(); ++v)
    if (rep.intervals[v].l <= min_right) out.push_back(static_cast<Vertex>(v));
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

Interval draw_interval(Sampler& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_length) {
  if (max_length <= 0) {
    std::int64_t a = rng.uniform(lo, hi);
    std::int64_t b = rng.uniform(lo, hi);
    if (a > b) std::swap(a, b);
    return {a, b};
  }
  std::int64_t l = rng.uniform(lo, hi);
  return {l, std::min(hi, l + rng.uniform(0, max_length))};
}

std::vector<Interval> draw_intervals(Sampler& rng, int n, std::int64_t lo, std::int64_t hi,
                                     std::int64_t max_length) {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(draw_interval(rng, lo, hi, max_length));
  return out;
}

}  // namespace

Representation gen_instance(RepClass cls, int n, std::uint64_t seed, const GenParams& params) {
  if (n < 1) invalid("n must be >= 1, got " + std::to_string(n));
  if (params.max_length < 0) invalid("max_length must be >= 0");
  std::int64_t lo = params.range_lo;
  std::int64_t hi = params.range_hi;
  if (hi < lo) {
    lo = 0;
    hi = 4 * static_cast<std::int64_t>(n);
  }
  Sampler rng(seed);
  switch (cls) {
    case RepClass::kInterval:
      return IntervalRep{draw_intervals(rng, n, lo, hi, params.max_length)};
    case RepClass::kIntervalOrder:
      return IntervalOrderRep{draw_intervals(rng, n, lo, hi, params.max_length)};
    case RepClass::kIntervalK: {
      if (params.k < 2) invalid("k must be >= 2, got " + std::to_string(params.k));
      IntervalKRep rep;
      rep.k = params.k;
      for (int i = 0; i < n; ++i) {
        rep.intervals.push_back(draw_interval(rng, lo, hi, params.max_length));
        rep.classes.push_back(static_cast<int>(rng.uniform(1, params.k)));
      }
      return rep;
    }
    case RepClass::kCircularArc: {
      std::int64_t c = params.circumference > 0 ? params.circumference : 4 * static_cast<std::int64_t>(n);
      if (c < 2) invalid("circumference must be >= 2");
      CircularArcRep rep;
      rep.circumference = c;
      for (int i = 0; i < n; ++i) {
        std::int64_t s = rng.uniform(0, c - 1);
        std::int64_t e;
        if (params.max_length > 0) {
          e = mod(s + rng.uniform(1, std::min(params.max_length, c - 1)), c);
        } else {
          do {
            e = rng.uniform(0, c - 1);
          } while (e == s);
        }
        rep.arcs.push_back({s, e});
      }
      return rep;
    }
    case RepClass::kContainment: {
      if (hi - lo + 1 < 2 * static_cast<std::int64_t>(n)) {
        invalid("endpoint range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "] is too small for " + std::to_string(2 * n) + " distinct endpoints");
      }
      ContainmentRep rep;
      std::set<std::int64_t> used;
      const long max_attempts = 1000L * n + 1000;
      long attempts = 0;
      while (static_cast<int>(rep.intervals.size()) < n) {
        if (++attempts > max_attempts)
          invalid("could not place distinct endpoints; widen the range or raise max_length");
        Interval iv = draw_interval(rng, lo, hi, params.max_length);
        if (iv.l == iv.r || used.count(iv.l) || used.count(iv.r)) continue;
        used.insert(iv.l);
        used.insert(iv.r);
        rep.intervals.push_back(iv);
      }
      return rep;
    }
  }
  invalid("unknown class");
}

// ---------------------------------------------------------------------------
// JSON documents

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::kParse, msg); }

std::int64_t require_int(const json& obj, const char* field, const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) parse_error(where + ": missing field \"" + field + "\"");
  if (!it->is_number_integer()) parse_error(where + ": field \"" + field + "\" must be an integer");
  return it->get<std::int64_t>();
}

}  // namespace

Representation parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) parse_error("instance document must be a JSON object");
  auto cls_it = doc.find("class");
  if (cls_it == doc.end() || !cls_it->is_string()) parse_error("missing string field \"class\"");
  RepClass cls;
  try {
    cls = parse_class_name(cls_it->get<std::string>());
  } catch (const Error& e) {
    parse_error(e.what());
  }
  auto verts_it = doc.find("vertices");
  if (verts_it == doc.end() || !verts_it->is_array()) parse_error("missing array field \"vertices\"");
  const auto& verts = *verts_it;
  const std::size_t n = verts.size();

  // Vertices may be listed in any order; ids must cover 0..n-1 exactly once.
  std::vector<const json*> by_id(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!verts[i].is_object()) parse_error(where + ": must be an object");
    std::int64_t id = require_int(verts[i], "id", where);
    if (id < 0 || static_cast<std::size_t>(id) >= n)
      parse_error(where + ": id " + std::to_string(id) + " outside 0.." + std::to_string(n - 1));
    if (by_id[id]) parse_error(where + ": duplicate id " + std::to_string(id));
    by_id[id] = &verts[i];
  }

  auto intervals = [&]() {
    std::vector<Interval> out;
    for (std::size_t v = 0; v < n; ++v) {
      const std::string where = vertex_tag(v);
      out.push_back({require_int(*by_id[v], "l", where), require_int(*by_id[v], "r", where)});
    }
    return out;
  };

  Representation rep;
  switch (cls) {
    case RepClass::kInterval: rep = IntervalRep{intervals()}; break;
    case RepClass::kContainment: rep = ContainmentRep{intervals()}; break;
    case RepClass::kIntervalOrder: rep = IntervalOrderRep{intervals()}; break;
    case RepClass::kIntervalK: {
      IntervalKRep r;
      r.k = static_cast<int>(require_int(doc, "k", "instance"));
      r.intervals = intervals();
      for (std::size_t v = 0; v < n; ++v)
        r.classes.push_back(static_cast<int>(require_int(*by_id[v], "class", vertex_tag(v))));
      rep = std::move(r);
      break;
    }
    case RepClass::kCircularArc: {
      CircularArcRep r;
      r.circumference = require_int(doc, "circumference", "instance");
      for (std::size_t v = 0; v < n; ++v) {
        const std::string where = vertex_tag(v);
        r.arcs.push_back({require_int(*by_id[v], "s", where), require_int(*by_id[v], "e", where)});
      }
      rep = std::move(r);
      break;
    }
  }
  validate_rep(rep);
  return rep;
}

std::string serialize_instance(const Representation& rep) {
  json doc;
  doc["class"] = std::string(class_name(rep_class(rep)));
  json verts = json::array();
  std::visit(overloaded{
                 [&](const IntervalKRep& r) {
                   doc["k"] = r.k;
                   for (std::size_t v = 0; v < r.intervals.size(); ++v) {
                     verts.push_back({{"id", v},
                                      {"l", r.intervals[v].l},
                                      {"r", r.intervals[v].r},
                                      {"class", r.classes[v]}});
                   }
                 },
                 [&](const CircularArcRep& r) {
                   doc["circumference"] = r.circumference;
                   for (std::size_t v = 0; v < r.arcs.size(); ++v)
                     verts.push_back({{"id", v}, {"s", r.arcs[v].s}, {"e", r.arcs[v].e}});
                 },
                 [&](const auto& r) {
                   for (std::size_t v = 0; v < r.intervals.size(); ++v)
                     verts.push_back({{"id", v}, {"l", r.intervals[v].l}, {"r", r.intervals[v].r}});
                 },
             },
             rep);
  doc["vertices"] = std::move(verts);
  return doc.dump(2) + "\n";
}

}  // namespace intervallabel
