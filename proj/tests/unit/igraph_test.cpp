#include <gtest/gtest.h>

#include "bnelim/errors.hpp"
#include "bnelim/igraph.hpp"
#include "bnelim/verify.hpp"
#include "networks.hpp"
#include "oracles.hpp"

using namespace bnelim;

namespace {

constexpr Sign kPos = Sign::positive;
constexpr Sign kNeg = Sign::negative;

std::vector<SignedEdge> edges_of(const SignedDigraph& g) { return g.edges(); }

oracle::Edges as_tuples(const SignedDigraph& g) {
  oracle::Edges out;
  for (const auto& e : g.edges()) {
    out.emplace(e.source, e.target, static_cast<int>(e.sign));
  }
  return out;
}

SignedDigraph graph(unsigned n, std::vector<SignedEdge> edges) {
  std::vector<std::string> names;
  for (unsigned k = 1; k <= n; ++k) {
    names.push_back(std::to_string(k));
  }
  return SignedDigraph(names, edges);
}

}  // namespace

TEST(LocalGraphTest, Examples) {
  for (std::uint64_t x = 0; x < 8; ++x) {
    EXPECT_EQ(local_interaction_graph(fixtures::zero(3), State(3, x)).edge_count(), 0u);
    const auto id = local_interaction_graph(fixtures::identity(3), State(3, x));
    EXPECT_EQ(edges_of(id), (std::vector<SignedEdge>{{0, 0, kPos}, {1, 1, kPos}, {2, 2, kPos}}));
  }
  const auto g = local_interaction_graph(fixtures::neg_loop(), State::parse("00"));
  EXPECT_EQ(edges_of(g), (std::vector<SignedEdge>{{1, 0, kNeg}, {1, 1, kNeg}}));
}

TEST(GlobalGraphTest, ForwardExample) {
  const auto g = global_interaction_graph(fixtures::forward());
  EXPECT_EQ(edges_of(g), (std::vector<SignedEdge>{
                             {0, 0, kNeg}, {0, 1, kPos}, {0, 2, kPos}, {1, 2, kNeg}, {2, 2, kPos}}));
}

TEST(GlobalGraphTest, NegativeLoopExample) {
  const auto g = global_interaction_graph(fixtures::neg_loop());
  EXPECT_EQ(edges_of(g), (std::vector<SignedEdge>{{1, 0, kNeg}, {1, 1, kNeg}}));
}

TEST(GlobalGraphTest, ThreeComponentExampleHasDualSignEdge) {
  const auto g = global_interaction_graph(fixtures::small_example());
  EXPECT_TRUE(g.has_edge(1, 0, kPos));
  EXPECT_TRUE(g.has_edge(1, 0, kNeg));
}

TEST(GlobalGraphTest, IsUnionOfLocalGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const unsigned n = 2 + seed % 5;
    const auto net = random_network(n, seed, {}, seed % 4);
    const auto g = global_interaction_graph(net);
    SignedDigraph u(net.names());
    for (std::uint64_t x = 0; x < net.state_count(); ++x) {
      for (const auto& e : local_interaction_graph(net, State(n, x)).edges()) {
        u.add_edge(e.source, e.target, e.sign);
      }
    }
    EXPECT_EQ(g, u) << seed;
    EXPECT_EQ(as_tuples(g), oracle::global_edges(net)) << seed;
  }
}

TEST(GlobalGraphTest, CapExceeded) {
  Limits limits;
  limits.max_table_components = 2;
  EXPECT_THROW(global_interaction_graph(fixtures::identity(3), limits), CapExceeded);
}

TEST(LoopTest, Examples) {
  EXPECT_TRUE(has_loop(global_interaction_graph(fixtures::forward()), 0, kNeg));
  EXPECT_FALSE(has_loop(global_interaction_graph(fixtures::identity(2)), 1, kNeg));
  EXPECT_TRUE(has_loop(global_interaction_graph(fixtures::identity(2)), 1));
  EXPECT_FALSE(has_loop(global_interaction_graph(fixtures::neg_loop()), 1, kPos));
  EXPECT_THROW(has_loop(global_interaction_graph(fixtures::neg_loop()), 2), InvalidArgument);
}

TEST(CycleTest, PositiveTwoCycle) {
  const auto cycles = elementary_cycles(graph(2, {{0, 1, kPos}, {1, 0, kPos}}));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].vertices, (std::vector<unsigned>{0, 1, 0}));
  EXPECT_EQ(cycles[0].sign, kPos);
}

TEST(CycleTest, ForwardExampleHasOnlyLoops) {
  const auto cycles = elementary_cycles(global_interaction_graph(fixtures::forward()));
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0].vertices, (std::vector<unsigned>{0, 0}));
  EXPECT_EQ(cycles[0].sign, kNeg);
  EXPECT_EQ(cycles[1].vertices, (std::vector<unsigned>{2, 2}));
  EXPECT_EQ(cycles[1].sign, kPos);
}

TEST(CycleTest, ParallelEdgesGiveOneCyclePerSign) {
  const auto cycles = elementary_cycles(graph(2, {{0, 1, kPos}, {0, 1, kNeg}, {1, 0, kPos}}));
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_NE(cycles[0].sign, cycles[1].sign);
  for (const auto& c : cycles) {
    EXPECT_EQ(c.support(), 3u);
  }
}

TEST(CycleTest, CountMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto net = random_network(2 + seed % 5, seed, {}, 2);
    const auto g = global_interaction_graph(net);
    const auto cycles = elementary_cycles(g);
    std::size_t positive = 0;
    for (const auto& c : cycles) {
      positive += c.sign == kPos;
      Sign product = kPos;
      for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k) {
        EXPECT_TRUE(g.has_edge(c.vertices[k], c.vertices[k + 1], c.edge_signs[k]));
        product = product * c.edge_signs[k];
      }
      EXPECT_EQ(product, c.sign);
    }
    EXPECT_EQ(positive, oracle::positive_cycle_sets(as_tuples(g), g.vertex_count()).size()) << seed;
  }
}

TEST(CycleTest, CapExceeded) {
  Limits limits;
  limits.max_cycle_vertices = 2;
  EXPECT_THROW(elementary_cycles(graph(3, {}), limits), CapExceeded);
  EXPECT_THROW(minimum_pfvs(graph(3, {}), limits), CapExceeded);
}

TEST(PfvsTest, IsPfvs) {
  const std::vector<unsigned> none;
  EXPECT_TRUE(is_pfvs(graph(2, {{0, 1, kNeg}, {1, 0, kPos}}), none));
  const auto forward = global_interaction_graph(fixtures::forward());
  const std::vector<unsigned> w{2};
  EXPECT_TRUE(is_pfvs(forward, w));
  EXPECT_FALSE(is_pfvs(forward, none));
  const auto two_cycle = graph(2, {{0, 1, kPos}, {1, 0, kPos}});
  const std::vector<unsigned> first{0};
  EXPECT_TRUE(is_pfvs(two_cycle, first));
  EXPECT_FALSE(is_pfvs(two_cycle, none));
}

TEST(PfvsTest, MinimumExamples) {
  EXPECT_TRUE(minimum_pfvs(graph(2, {{0, 1, kNeg}, {1, 0, kPos}})).empty());
  EXPECT_EQ(minimum_pfvs(global_interaction_graph(fixtures::forward())), std::vector<unsigned>{2});
  const auto disjoint = graph(4, {{0, 1, kPos}, {1, 0, kPos}, {2, 3, kPos}, {3, 2, kPos}});
  EXPECT_EQ(minimum_pfvs(disjoint), (std::vector<unsigned>{0, 2}));
  EXPECT_EQ(all_minimum_pfvs(disjoint).size(), 4u);
}

TEST(PfvsTest, MatchesBruteForceHittingSet) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto net = random_network(2 + seed % 5, seed, {}, 1 + seed % 3);
    const auto g = global_interaction_graph(net);
    EXPECT_EQ(minimum_pfvs(g), oracle::minimum_pfvs(as_tuples(g), g.vertex_count())) << seed;
    for (const auto& set : all_minimum_pfvs(g)) {
      EXPECT_TRUE(is_pfvs(g, set));
      EXPECT_EQ(set.size(), minimum_pfvs(g).size());
    }
  }
}

TEST(SignedPathTest, Examples) {
  const auto forward = global_interaction_graph(fixtures::forward());
  EXPECT_TRUE(has_signed_path(forward, 0, 2, kNeg));
  EXPECT_TRUE(has_signed_path(forward, 0, 2, kPos));
  EXPECT_FALSE(has_signed_path(forward, 2, 0, kPos));
  EXPECT_TRUE(has_signed_path(forward, 2, 2, kPos));
  EXPECT_FALSE(has_signed_path(forward, 1, 1, kPos));
  const auto empty = graph(3, {});
  for (unsigned j = 0; j < 3; ++j) {
    for (unsigned i = 0; i < 3; ++i) {
      if (i != j) {
        EXPECT_FALSE(has_signed_path(empty, j, i, kPos));
        EXPECT_FALSE(has_signed_path(empty, j, i, kNeg));
      }
    }
  }
  EXPECT_THROW(has_signed_path(empty, 0, 3, kPos), InvalidArgument);
}

TEST(SignedPathTest, ElementaryOnly) {
  // 0 -> 1 (+), 1 -> 1 (-): the loop cannot be used mid-path.
  const auto g = graph(2, {{0, 1, kPos}, {1, 1, kNeg}});
  EXPECT_TRUE(has_signed_path(g, 0, 1, kPos));
  EXPECT_FALSE(has_signed_path(g, 0, 1, kNeg));
}

TEST(DotTest, SignStyles) {
  const std::string dot = igraph_to_dot(global_interaction_graph(fixtures::forward()));
  EXPECT_NE(dot.find("sign=\"+1\""), std::string::npos);
  EXPECT_NE(dot.find("sign=\"-1\""), std::string::npos);
  EXPECT_NE(dot.find("dashed"), std::string::npos);
  EXPECT_NE(dot.find("green"), std::string::npos);
  EXPECT_NE(dot.find("red"), std::string::npos);
}
