#include <gtest/gtest.h>

#include "localgsp/ball.hpp"
#include "localgsp/error.hpp"
#include "localgsp/generators.hpp"
#include "localgsp/gso.hpp"
#include "oracles/dense.hpp"
#include "oracles/random_instances.hpp"

using namespace localgsp;

namespace {

void expect_errc(Errc code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Graph, SingleEdge) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 1u);
}

TEST(Graph, Triangle) {
  const Graph g = complete_graph(3);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(Graph, RejectsInvalidInput) {
  expect_errc(Errc::self_loop, [] { build_graph(2, {{0, 0}}); });
  expect_errc(Errc::node_out_of_range, [] { build_graph(2, {{0, 2}}); });
  expect_errc(Errc::duplicate_edge, [] { build_graph(2, {{0, 1}, {1, 0}}); });
  expect_errc(Errc::weight_count_mismatch, [] { build_graph(2, {{0, 1}}, std::vector<double>{}); });
  expect_errc(Errc::negative_weight, [] { build_graph(2, {{0, 1}}, std::vector<double>{-1.0}); });
  expect_errc(Errc::signal_length_mismatch,
              [] { build_graph(2, {{0, 1}}, std::nullopt, std::vector<double>{1.0}); });
}

TEST(Graph, AdjacencySorted) {
  const Graph g = build_graph(4, {{3, 0}, {0, 2}, {1, 0}});
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<NodeId>(nb.begin(), nb.end()), (std::vector<NodeId>{1, 2, 3}));
}

TEST(Neighborhood, PathExamples) {
  const Graph g = path_graph(3);
  const NodeId seed[] = {0};
  EXPECT_EQ(k_hop_neighborhood(g, seed, 0), (std::vector<NodeId>{0}));
  EXPECT_EQ(k_hop_neighborhood(g, seed, 1), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(k_hop_neighborhood(g, seed, 2), (std::vector<NodeId>{0, 1, 2}));
}

TEST(Neighborhood, WholeVertexSetIsFixed) {
  const Graph g = oracle::random_signal_graph(3, 10, 30, 4);
  std::vector<NodeId> all(g.num_nodes());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(k_hop_neighborhood(g, all, k), all);
}

TEST(Neighborhood, MonotoneInK) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = oracle::random_signal_graph(s, 5, 40, 4);
    const NodeId seed[] = {0};
    auto prev = k_hop_neighborhood(g, seed, 0);
    for (std::size_t k = 1; k < 6; ++k) {
      auto cur = k_hop_neighborhood(g, seed, k);
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
  }
}

TEST(Gso, P2Laplacian) {
  const auto s = build_gso(path_graph(2), GsoKind::laplacian);
  EXPECT_EQ(s.dense(), (std::vector<double>{1, -1, -1, 1}));
}

TEST(Gso, WeightedP2) {
  const Graph g = build_graph(2, {{0, 1}}, std::vector<double>{2.0});
  EXPECT_EQ(build_gso(g, GsoKind::weighted_laplacian).dense(), (std::vector<double>{2, -2, -2, 2}));
  expect_errc(Errc::missing_weights, [] { build_gso(path_graph(2), GsoKind::weighted_laplacian); });
}

TEST(Gso, K3EigenvaluesByJacobi) {
  const auto values = oracle::jacobi_eigenvalues(oracle::laplacian(complete_graph(3)));
  EXPECT_NEAR(values[0], 0.0, 1e-12);
  EXPECT_NEAR(values[1], 3.0, 1e-12);
  EXPECT_NEAR(values[2], 3.0, 1e-12);
}

TEST(Gso, MatchesDenseConstruction) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = oracle::random_signal_graph(s, 2, 30, 6);
    const auto dense = build_gso(g, GsoKind::laplacian).dense();
    const auto ref = oracle::laplacian(g);
    const std::size_t n = g.num_nodes();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(dense[i * n + j], ref[i][j]);
    const auto adj = build_gso(g, GsoKind::adjacency).dense();
    const auto aref = oracle::adjacency(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(adj[i * n + j], aref[i][j]);
  }
}

TEST(Gso, SymmetricAndRowsSumToZero) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = oracle::random_signal_graph(s, 2, 40, 6);
    g = with_random_weights(g, 0.0, 3.0, s);
    for (GsoKind kind : {GsoKind::laplacian, GsoKind::weighted_laplacian}) {
      const auto d = build_gso(g, kind).dense();
      const std::size_t n = g.num_nodes();
      for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_EQ(d[i * n + j], d[j * n + i]);
          row += d[i * n + j];
        }
        EXPECT_NEAR(row, 0.0, 1e-12);
      }
    }
    const auto w = build_gso(g, GsoKind::weighted_laplacian);
    for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_EQ(w.at(v, v), g.weighted_degree(v));
  }
}

TEST(Gso, QuadraticFormIsEdgeSum) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = oracle::random_signal_graph(s, 2, 50, 6);
    const auto x = g.signal();
    const auto y = build_gso(g, GsoKind::laplacian).apply(x);
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) q += x[i] * y[i];
    double edges = 0.0;
    for (const auto& e : g.edges()) edges += (x[e.u] - x[e.v]) * (x[e.u] - x[e.v]);
    EXPECT_NEAR(q, edges, 1e-12 * std::max(1.0, edges));
  }
}

TEST(Ball, DepthZero) {
  const Graph g = cycle_graph(5).with_signal({1, 2, 3, 4, 5});
  const auto ball = extract_rooted_ball(g, 2, 0);
  EXPECT_EQ(ball.size(), 1u);
  EXPECT_EQ(ball.root_value(), 3.0);
}

TEST(Ball, C4OneBallIsPath) {
  const auto ball = extract_rooted_ball(cycle_graph(4), 0, 1);
  EXPECT_EQ(ball.size(), 3u);
  EXPECT_EQ(ball.graph.num_edges(), 2u);
  EXPECT_EQ(ball.origin, (std::vector<NodeId>{0, 1, 3}));
  EXPECT_FALSE(ball.graph.adjacent(1, 2));  // parent nodes 1 and 3
  EXPECT_EQ(ball.graph.signal()[ball.root], 0.0);
}

TEST(Ball, StarLeaf) {
  const auto ball = extract_rooted_ball(star_graph(3), 2, 1);
  EXPECT_EQ(ball.size(), 2u);
  EXPECT_EQ(ball.graph.num_edges(), 1u);
}

TEST(Ball, NodeSetMatchesNeighborhood) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = oracle::random_signal_graph(s, 5, 40, 5);
    for (NodeId r = 0; r < g.num_nodes(); ++r) {
      for (std::size_t K = 0; K < 4; ++K) {
        const auto ball = extract_rooted_ball(g, r, K);
        const NodeId seed[] = {r};
        EXPECT_EQ(ball.origin, k_hop_neighborhood(g, seed, K));
        EXPECT_LE(ball.graph.max_degree(), g.max_degree());
        for (std::size_t i = 0; i < ball.size(); ++i) {
          EXPECT_EQ(ball.graph.signal()[i], g.signal()[ball.origin[i]]);
        }
      }
    }
  }
}

TEST(Ball, LargeDepthCoversComponent) {
  const Graph g = cycle_graph(9);
  const auto ball = extract_rooted_ball(g, 4, 20);
  EXPECT_EQ(ball.size(), 9u);
  EXPECT_EQ(ball.graph.num_edges(), 9u);
}
