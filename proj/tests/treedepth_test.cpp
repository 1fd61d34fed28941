// Copyright 2026 The sipdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sipdepth/error.hpp"
#include "sipdepth/gaifman.hpp"
#include "sipdepth/treedepth.hpp"

namespace sipdepth {
namespace {

constexpr std::optional<Vertex> kRoot = std::nullopt;

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Errc error_code(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

TEST(CheckForestTest, SingleEdge) {
  EXPECT_EQ(check_forest(path(2), {{kRoot, 0}}), 2u);
}

TEST(CheckForestTest, TriangleChain) {
  EXPECT_EQ(check_forest(complete(3), {{kRoot, 0, 1}}), 3u);
}

TEST(CheckForestTest, CrossTreeEdge) {
  // Path a-b-c with roots a and c, b under a.
  try {
    check_forest(path(3), {{kRoot, 0, kRoot}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kCrossTreeEdge);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{1, 2}));
  }
}

TEST(CheckForestTest, UncoveredEdge) {
  // Star forest 0 -> {1, 2} cannot hold the edge 1-2.
  try {
    check_forest(Graph::from_edges(3, {{1, 2}}), {{kRoot, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUncoveredEdge);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{1, 2}));
  }
}

TEST(CheckForestTest, Cycle) {
  EXPECT_EQ(error_code([] { check_forest(path(3), {{1, 2, 0}}); }), Errc::kNotAForest);
  EXPECT_EQ(error_code([] { check_forest(path(2), {{1, 1}}); }), Errc::kNotAForest);
  EXPECT_EQ(error_code([] { check_forest(path(2), {{kRoot, 5}}); }), Errc::kNotAForest);
}

TEST(CheckForestTest, SlotCountMustMatch) {
  EXPECT_EQ(error_code([] { check_forest(path(3), {{kRoot, 0}}); }), Errc::kDimensionMismatch);
}

TEST(ExactTreedepthTest, SmallExamples) {
  EXPECT_EQ(exact_treedepth(Graph(1)).depth, 1u);
  EXPECT_EQ(exact_treedepth(Graph(0)).depth, 0u);
  EXPECT_EQ(oracle::treedepth(3, path(3).edges()), 2u);
  EXPECT_EQ(exact_treedepth(path(3)).depth, 2u);
  EXPECT_EQ(oracle::treedepth(7, path(7).edges()), 3u);
  EXPECT_EQ(exact_treedepth(path(7)).depth, 3u);
  EXPECT_EQ(oracle::treedepth(4, complete(4).edges()), 4u);
  EXPECT_EQ(exact_treedepth(complete(4)).depth, 4u);
}

TEST(ExactTreedepthTest, PathsFollowLogFormula) {
  for (std::size_t n = 1; n <= 15; ++n) {
    const std::size_t expected = std::bit_width(n);  // ceil(log2(n + 1))
    if (n <= 8) ASSERT_EQ(oracle::treedepth(n, path(n).edges()), expected) << n;
    const auto result = exact_treedepth(path(n));
    EXPECT_EQ(result.depth, expected) << n;
    EXPECT_EQ(check_forest(path(n), result.forest), expected);
  }
}

TEST(ExactTreedepthTest, CompleteGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::treedepth(n, complete(n).edges()), n);
    EXPECT_EQ(exact_treedepth(complete(n)).depth, n);
  }
}

TEST(ExactTreedepthTest, TieBreakPicksSmallestVertex) {
  // Path 0-1-2: only the middle vertex gives depth 2.
  EXPECT_EQ(exact_treedepth(path(3)).forest, (EliminationForest{{1, kRoot, 1}}));
  // K3: every vertex works, vertex 0 goes on top.
  EXPECT_EQ(exact_treedepth(complete(3)).forest.parent[0], kRoot);
}

TEST(ExactTreedepthTest, TooLarge) {
  EXPECT_EQ(error_code([] { exact_treedepth(Graph(21)); }), Errc::kTooLarge);
  EXPECT_NO_THROW(exact_treedepth(path(20)));
}

TEST(ExactTreedepthTest, MatchesRecursiveOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto g = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    EXPECT_EQ(exact_treedepth(g).depth, oracle::treedepth(n, g.edges()));
  }
}

TEST(ExactTreedepthTest, CertificateConsistency) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto g = random_graph(rng, n, 0.15 + 0.05 * (trial % 10));
    const auto result = exact_treedepth(g);
    EXPECT_EQ(check_forest(g, result.forest), result.depth);
  }
}

TEST(ExactTreedepthTest, MonotoneUnderVertexDeletion) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const auto g = random_graph(rng, n, 0.35);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 != 0) keep.push_back(v);
    }
    EXPECT_LE(exact_treedepth(g.induced(keep)).depth, exact_treedepth(g).depth);
  }
}

// --- Incidence forest to dual / primal forest ---------------------------------

TEST(IncidenceToDualTest, SingleRowStar) {
  const auto a = dense_matrix({{1, 1}});
  const EliminationForest f{{kRoot, 0, 0}};  // r0 root, c0 and c1 below
  const auto dual = incidence_to_dual_forest(a, f);
  EXPECT_EQ(dual, (EliminationForest{{kRoot}}));
  EXPECT_EQ(check_forest(dual_graph(a), dual), 1u);
}

TEST(IncidenceToDualTest, ColumnRootBecomesRowChain) {
  const auto a = dense_matrix({{1}, {1}});
  const EliminationForest f{{2, 2, kRoot}};  // c0 root, r0 and r1 below
  ASSERT_EQ(check_forest(incidence_graph(a), f), 2u);
  const auto dual = incidence_to_dual_forest(a, f);
  EXPECT_EQ(dual, (EliminationForest{{kRoot, 0}}));
  EXPECT_EQ(check_forest(dual_graph(a), dual), 2u);  // <= 2 * 2
}

TEST(IncidenceToDualTest, BlockDecomposable) {
  const auto a = dense_matrix({{1, 0}, {0, 1}});
  const EliminationForest f{{kRoot, kRoot, 0, 1}};
  const auto dual = incidence_to_dual_forest(a, f);
  EXPECT_EQ(dual, (EliminationForest{{kRoot, kRoot}}));
  EXPECT_EQ(check_forest(dual_graph(a), dual), 1u);
}

TEST(IncidenceToDualTest, RejectsInvalidForest) {
  const auto a = dense_matrix({{1}, {1}});
  EXPECT_EQ(error_code([&] { incidence_to_dual_forest(a, {{kRoot, kRoot, kRoot}}); }),
            Errc::kInvalidInputForest);
}

TEST(IncidenceToPrimalTest, RowRootBecomesColumnChain) {
  const auto a = dense_matrix({{1, 1}});
  const auto primal = incidence_to_primal_forest(a, {{kRoot, 0, 0}});
  EXPECT_EQ(primal, (EliminationForest{{kRoot, 0}}));
  EXPECT_EQ(check_forest(primal_graph(a), primal), 2u);  // <= 2 * 2
}

TEST(IncidenceToPrimalTest, Identity) {
  const auto a = dense_matrix({{1, 0}, {0, 1}});
  const auto primal = incidence_to_primal_forest(a, {{kRoot, kRoot, 0, 1}});
  EXPECT_EQ(primal, (EliminationForest{{kRoot, kRoot}}));
}

TEST(IncidenceToPrimalTest, SingleColumn) {
  const auto a = dense_matrix({{1}, {1}});
  const auto primal = incidence_to_primal_forest(a, {{2, 2, kRoot}});
  EXPECT_EQ(primal, (EliminationForest{{kRoot}}));
  EXPECT_EQ(check_forest(primal_graph(a), primal), 1u);
}

TEST(IncidenceToDualTest, PropertyRandomMatrices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + trial % 5, n = 1 + (trial / 5) % 5;
    const auto a = dense_matrix(oracle::random_dense(rng, m, n, 1), n);
    const auto incidence = exact_treedepth(incidence_graph(a));
    const auto stats = degree_stats(a);
    const auto dual = incidence_to_dual_forest(a, incidence.forest);
    const auto primal = incidence_to_primal_forest(a, incidence.forest);
    EXPECT_LE(check_forest(dual_graph(a), dual),
              std::max<std::size_t>(1, stats.maxdeg_v) * incidence.depth);
    EXPECT_LE(check_forest(primal_graph(a), primal),
              std::max<std::size_t>(1, stats.maxdeg_c) * incidence.depth);
  }
}

TEST(ForestJsonTest, RoundTrip) {
  const EliminationForest f{{kRoot, 0, 1, kRoot}};
  const auto text = serialize_forest(f);
  EXPECT_EQ(text, "{\"parent\":[-1,0,1,-1]}\n");
  EXPECT_EQ(parse_forest(text), f);
  EXPECT_EQ(error_code([] { parse_forest("{\"parent\":[-2]}"); }), Errc::kSyntax);
}

}  // namespace
}  // namespace sipdepth
