#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "intervallabel/error.hpp"
#include "intervallabel/graph.hpp"
#include "oracle.hpp"

using namespace intervallabel;
using fixtures::matrix;

namespace {

std::vector<Vertex> members(const Bitset& b) {
  std::vector<Vertex> out;
  b.for_each([&](std::size_t i) { out.push_back(static_cast<Vertex>(i)); });
  return out;
}

std::vector<Vertex> nbrs(const Graph& g, Vertex v) {
  auto s = g.neighbors(v);
  return {s.begin(), s.end()};
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return build_graph(n, e);
}

}  // namespace

TEST(BuildGraph, PathAdjacency) {
  Graph g = fixtures::path(3);
  EXPECT_EQ(nbrs(g, 1), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(BuildGraph, SingleVertex) {
  Graph g = build_graph(1, {});
  EXPECT_EQ(compute_stats(g).max_degree, 0);
}

TEST(BuildGraph, SampleK3) {
  Graph g = build_graph(5, fixtures::sample_k3_edges());
  EXPECT_EQ(nbrs(g, 0), (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(BuildGraph, RejectsBadInput) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(build_graph(3, loop), Error);
  EXPECT_THROW(build_graph(3, out_of_range), Error);
  try {
    build_graph(3, loop);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(BuildGraph, CollapsesDuplicates) {
  std::vector<Edge> e{{0, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(build_graph(2, e).edge_count(), 1u);
}

TEST(Dist2, Examples) {
  EXPECT_EQ(members(dist2_set(fixtures::path(4), 0)), (std::vector<Vertex>{2}));
  EXPECT_TRUE(dist2_set(fixtures::complete(3), 1).none());
  Graph sample = build_graph(5, fixtures::sample_k3_edges());
  EXPECT_EQ(members(dist2_set(sample, 3)), (std::vector<Vertex>{4}));
}

TEST(Square, Examples) {
  EXPECT_EQ(square(fixtures::cycle(4)), fixtures::complete(4));
  EXPECT_EQ(square(fixtures::path(3)), fixtures::complete(3));
  EXPECT_EQ(square(fixtures::star(3)), fixtures::complete(4));
}

TEST(Stats, Examples) {
  auto c4 = compute_stats(fixtures::cycle(4));
  EXPECT_EQ(c4.max_degree, 2);
  EXPECT_EQ(c4.multiplicity, 2);

  auto k3 = compute_stats(fixtures::complete(3), 64);
  EXPECT_EQ(k3.max_degree, 2);
  EXPECT_EQ(k3.multiplicity, 1);
  EXPECT_EQ(k3.multiplicity_nonadjacent, 0);
  EXPECT_EQ(k3.omega, 3);

  auto sample = compute_stats(build_graph(5, fixtures::sample_k3_edges()), 64);
  EXPECT_EQ(sample.max_degree, 4);
  EXPECT_EQ(sample.multiplicity, 3);
  EXPECT_EQ(sample.omega, 3);
  EXPECT_EQ(sample.m, 8u);
}

TEST(Stats, OmegaOnlyUnderCap) {
  EXPECT_FALSE(compute_stats(fixtures::complete(5)).omega.has_value());
  EXPECT_FALSE(compute_stats(fixtures::complete(5), 4).omega.has_value());
  EXPECT_EQ(compute_stats(fixtures::complete(5), 5).omega, 5);
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number_exact(fixtures::complete(5)), 5);
  EXPECT_EQ(clique_number_exact(fixtures::cycle(5)), 2);
  EXPECT_EQ(clique_number_exact(build_graph(5, fixtures::sample_k3_edges())), 3);
  EXPECT_EQ(clique_number_exact(build_graph(0, {})), 0);
  try {
    clique_number_exact(fixtures::complete(8), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(TwoK2, Examples) {
  std::vector<Edge> two_k2{{0, 1}, {2, 3}};
  EXPECT_FALSE(is_2k2_free(build_graph(4, two_k2)));
  EXPECT_TRUE(is_2k2_free(fixtures::star(3)));
  EXPECT_FALSE(is_2k2_free(fixtures::cycle(6)));
  EXPECT_TRUE(is_2k2_free(fixtures::cycle(4)));
}

TEST(Complement, RoundTrip) {
  Graph g = build_graph(5, fixtures::sample_k3_edges());
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(g).edge_count(), 10u - 8u);
}

TEST(InducedSubgraph, RelabelsInOrder) {
  Graph g = fixtures::path(4);
  std::vector<Vertex> keep{3, 2, 0};
  Graph h = induced_subgraph(g, keep);
  EXPECT_EQ(h.n(), 3);
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_FALSE(h.adjacent(1, 2));
  EXPECT_FALSE(h.adjacent(0, 2));
}

TEST(GraphProperties, AgreeWithBruteForce) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 14;
    Graph g = random_graph(n, 0.1 + 0.05 * (trial % 15), rng);
    auto a = matrix(g);
    auto d = oracle::distances(a);

    auto stats = compute_stats(g, 64);
    EXPECT_EQ(stats.max_degree, oracle::max_degree(a));
    EXPECT_EQ(stats.min_degree, oracle::min_degree(a));
    EXPECT_EQ(stats.multiplicity, oracle::multiplicity(a));
    EXPECT_EQ(stats.omega, oracle::clique_number(a));

    bool connected = true;
    for (int v = 0; v < n; ++v) connected = connected && d[0][v] >= 0;
    EXPECT_EQ(stats.is_connected, connected);

    Graph sq = square(g);
    for (int u = 0; u < n; ++u) {
      Bitset d2 = dist2_set(g, u);
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(d2.test(v), d[u][v] == 2);
        EXPECT_EQ(sq.adjacent(u, v), d[u][v] == 1 || d[u][v] == 2);
      }
    }

    bool free = true;
    for (int a0 = 0; a0 < n && free; ++a0)
      for (int b0 = a0 + 1; b0 < n && free; ++b0)
        for (int c0 = 0; c0 < n && free; ++c0)
          for (int d0 = c0 + 1; d0 < n && free; ++d0) {
            if (c0 == a0 || c0 == b0 || d0 == a0 || d0 == b0) continue;
            if (a[a0][b0] && a[c0][d0] && !a[a0][c0] && !a[a0][d0] && !a[b0][c0] && !a[b0][d0])
              free = false;
          }
    EXPECT_EQ(is_2k2_free(g), free);
  }
}
