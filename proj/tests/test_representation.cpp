#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "intervallabel/error.hpp"
#include "intervallabel/representation.hpp"
#include "oracle.hpp"

using namespace intervallabel;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(DeriveGraph, SampleK3) {
  Graph g = derive_graph(fixtures::sample_k3());
  EXPECT_EQ(g, build_graph(5, fixtures::sample_k3_edges()));
}

TEST(DeriveGraph, OrderStar) {
  Graph g = derive_graph(fixtures::order_star());
  EXPECT_EQ(g, fixtures::star(3));
}

TEST(DeriveGraph, Containment) {
  ContainmentRep rep{{{0, 9}, {1, 3}, {4, 8}, {5, 6}}};
  std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {2, 3}};
  EXPECT_EQ(derive_graph(rep), build_graph(4, expected));
}

TEST(DeriveGraph, TouchingEndpointsIntersect) {
  IntervalRep rep{{{0, 2}, {2, 4}, {5, 6}}};
  Graph g = derive_graph(rep);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(DeriveGraph, WrappingArcs) {
  CircularArcRep rep{{{8, 1}, {0, 2}, {3, 5}, {5, 7}}, 10};
  Graph g = derive_graph(rep);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(RightpointOrder, SampleK3) {
  // c, a, e, d, b
  EXPECT_EQ(rightpoint_order_desc(Representation{fixtures::sample_k3()}),
            (std::vector<Vertex>{2, 0, 4, 3, 1}));
}

TEST(RightpointOrder, TiesById) {
  IntervalRep same{{{0, 1}, {0, 1}, {0, 1}}};
  EXPECT_EQ(rightpoint_order_desc(Representation{same}), (std::vector<Vertex>{0, 1, 2}));
  // y, z, x, c
  EXPECT_EQ(rightpoint_order_desc(Representation{fixtures::order_star()}),
            (std::vector<Vertex>{2, 3, 1, 0}));
}

TEST(RightpointOrder, ArcsHaveNoLineOrder) {
  EXPECT_EQ(code_of([] { rightpoint_order_desc(Representation{fixtures::twelve_arcs()}); }),
            ErrorCode::kNotApplicable);
}

TEST(SplitCircular, TwelveArcsAtFixedCut) {
  // Cut at 55 degrees, where three arcs meet.
  auto split = split_circular_at(fixtures::twelve_arcs(), 110);
  EXPECT_EQ(split.clique_ids, (std::vector<Vertex>{0, 4, 11}));
  EXPECT_EQ(split.line.intervals.size(), 9u);
  EXPECT_EQ(split.line_ids.size(), 9u);
}

TEST(SplitCircular, TwelveArcsLeastCovered) {
  auto split = split_circular(fixtures::twelve_arcs());
  EXPECT_EQ(split.clique_ids.size(), 1u);
  EXPECT_EQ(split.line.intervals.size(), 11u);
}

TEST(SplitCircular, DisjointArcsGiveEmptyClique) {
  CircularArcRep rep{{{0, 1}, {3, 4}, {6, 7}}, 10};
  auto split = split_circular(rep);
  EXPECT_TRUE(split.clique_ids.empty());
  EXPECT_EQ(split.line.intervals.size(), 3u);
}

TEST(SplitCircular, CommonGapKeepsAdjacency) {
  // Both arcs cover everything except the points 5 and 6.
  CircularArcRep rep{{{7, 4}, {7, 4}}, 10};
  auto split = split_circular(rep);
  EXPECT_TRUE(split.clique_ids.empty());
  ASSERT_EQ(split.line.intervals.size(), 2u);
  EXPECT_TRUE(split.line.intervals[0].intersects(split.line.intervals[1]));
}

TEST(SplitCircular, LinePartPreservesAdjacency) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rep = std::get<CircularArcRep>(gen_instance(RepClass::kCircularArc, 15, seed));
    auto split = split_circular(rep);
    Graph full = derive_graph(rep);
    Graph line = derive_graph(split.line);
    for (std::size_t i = 0; i < split.line_ids.size(); ++i)
      for (std::size_t j = 0; j < split.line_ids.size(); ++j)
        if (i != j) {
          EXPECT_EQ(line.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)),
                    full.adjacent(split.line_ids[i], split.line_ids[j]))
              << "seed " << seed;
        }
    for (std::size_t i = 0; i < split.clique_ids.size(); ++i)
      for (std::size_t j = i + 1; j < split.clique_ids.size(); ++j)
        EXPECT_TRUE(full.adjacent(split.clique_ids[i], split.clique_ids[j]));
    EXPECT_EQ(split.line_ids.size() + split.clique_ids.size(), rep.arcs.size());
  }
}

TEST(MinimalElements, Examples) {
  EXPECT_EQ(minimal_elements(fixtures::order_star()), (std::vector<Vertex>{0}));
  IntervalOrderRep antichain{{{0, 5}, {1, 6}, {2, 7}}};
  EXPECT_EQ(minimal_elements(antichain), (std::vector<Vertex>{0, 1, 2}));
  IntervalOrderRep chain{{{4, 5}, {0, 1}, {2, 3}}};
  EXPECT_EQ(minimal_elements(chain), (std::vector<Vertex>{1}));
}

TEST(Generator, SingleVertex) {
  for (RepClass c : fixtures::all_classes()) {
    auto rep = gen_instance(c, 1, 99);
    EXPECT_EQ(vertex_count(rep), 1);
    EXPECT_EQ(derive_graph(rep).edge_count(), 0u);
  }
}

TEST(Generator, Deterministic) {
  for (RepClass c : fixtures::all_classes()) {
    EXPECT_EQ(serialize_instance(gen_instance(c, 30, 7)), serialize_instance(gen_instance(c, 30, 7)));
    EXPECT_NE(serialize_instance(gen_instance(c, 30, 7)), serialize_instance(gen_instance(c, 30, 8)));
  }
}

TEST(Generator, ContainmentRangeTooSmall) {
  GenParams gp;
  gp.range_lo = 0;
  gp.range_hi = 10;
  EXPECT_EQ(code_of([&] { gen_instance(RepClass::kContainment, 50, 1, gp); }),
            ErrorCode::kInvalidArgument);
}

TEST(Generator, OutputsAreValid) {
  GenParams tight;
  tight.max_length = 3;
  for (RepClass c : fixtures::all_classes())
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto rep = gen_instance(c, 20, seed);
      EXPECT_NO_THROW(validate_rep(rep));
      EXPECT_EQ(rep_class(rep), c);
      auto short_rep = gen_instance(c, 20, seed, tight);
      EXPECT_NO_THROW(validate_rep(short_rep));
    }
}

TEST(Generator, IntervalKRespectsK) {
  GenParams gp;
  gp.k = 2;
  auto rep = std::get<IntervalKRep>(gen_instance(RepClass::kIntervalK, 40, 3, gp));
  EXPECT_EQ(rep.k, 2);
  for (int c : rep.classes) EXPECT_TRUE(c == 1 || c == 2);
}

TEST(Generator, EndpointRange) {
  GenParams gp;
  gp.range_lo = 100;
  gp.range_hi = 120;
  auto rep = std::get<IntervalRep>(gen_instance(RepClass::kInterval, 30, 5, gp));
  for (auto iv : rep.intervals) {
    EXPECT_GE(iv.l, 100);
    EXPECT_LE(iv.r, 120);
  }
}

TEST(DeriveGraph, MatchesGeometryOracle) {
  for (RepClass c : fixtures::all_classes())
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto rep = gen_instance(c, 14, seed);
      EXPECT_EQ(fixtures::matrix(derive_graph(rep)), oracle::adjacency(rep))
          << class_name(c) << " seed " << seed;
    }
}

TEST(Serialization, RoundTrip) {
  Representation sample = fixtures::sample_k3();
  EXPECT_EQ(parse_instance(serialize_instance(sample)), sample);
  for (RepClass c : fixtures::all_classes())
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto rep = gen_instance(c, 12, seed);
      EXPECT_EQ(parse_instance(serialize_instance(rep)), rep);
    }
}

TEST(Serialization, MissingClassNamesVertex) {
  const char* doc = R"({"class":"interval_k","k":3,"vertices":[
    {"id":0,"l":1,"r":9,"class":1},
    {"id":1,"l":0,"r":4}]})";
  EXPECT_EQ(code_of([&] { parse_instance(doc); }), ErrorCode::kParse);
  EXPECT_NE(message_of([&] { parse_instance(doc); }).find("vertex 1"), std::string::npos);
}

TEST(Serialization, RejectsInvertedInterval) {
  const char* doc = R"({"class":"interval","vertices":[{"id":0,"l":5,"r":2}]})";
  EXPECT_EQ(code_of([&] { parse_instance(doc); }), ErrorCode::kInvalidArgument);
  EXPECT_NE(message_of([&] { parse_instance(doc); }).find("vertex 0"), std::string::npos);
}

TEST(Serialization, IdsMustCoverRange) {
  const char* doc = R"({"class":"interval","vertices":[{"id":0,"l":0,"r":1},{"id":5,"l":0,"r":1}]})";
  EXPECT_EQ(code_of([&] { parse_instance(doc); }), ErrorCode::kParse);
}

TEST(Serialization, MalformedJson) {
  EXPECT_EQ(code_of([] { parse_instance("{not json"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_instance(R"({"class":"hexagon","vertices":[]})"); }),
            ErrorCode::kParse);
}
