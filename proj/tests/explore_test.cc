// Copyright 2026 The pdel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdel/explore.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "pdel/equiv.h"
#include "pdel/seeds.h"
#include "test_util.h"

namespace pdel {
namespace {

using testing::RandomAffine;

ExplorationState RunToCompletion(const std::vector<PolytopeRecord>& seeds, ExploreLimits limits = {}) {
  ExplorationState s = InitialState(seeds);
  Explore(s, limits);
  return s;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(ExploreTest, SegmentGraphIsOneLoop) {
  const ExplorationState s = RunToCompletion({SegmentSeed()});
  ASSERT_EQ(s.graph.nodes.size(), 1u);
  ASSERT_EQ(s.graph.edges.size(), 1u);
  EXPECT_EQ(s.graph.edges[0].source, 0u);
  EXPECT_EQ(s.graph.edges[0].target, 0u);
  EXPECT_EQ(s.graph.edges[0].rho_m, 2);
  EXPECT_EQ(ExportGap(s.graph), "1: [1, 1]\n");
  EXPECT_EQ(s.graph.nodes[0].aut_order, 2);
  EXPECT_TRUE(s.frontier.empty());
}

TEST(ExploreTest, GossetComponentHasOneBoundedType) {
  const ExplorationState s = RunToCompletion({Gosset221Seed()});
  std::size_t bounded = 0;
  for (const GraphNode& n : s.graph.nodes) bounded += n.record.bounded;
  EXPECT_EQ(bounded, 1u);
  ASSERT_EQ(s.graph.nodes.size(), 2u);
  EXPECT_EQ(s.graph.nodes[1].key, UnboundedKey(UnitSlab(6)));
  ASSERT_EQ(s.graph.edges.size(), 1u);
  // Bounded view: an isolated node. Full view: the edge to the slab.
  const std::string gap = ExportGap(s.graph);
  EXPECT_NE(gap.find("\n1:\n"), std::string::npos);
  EXPECT_EQ(gap.find("[1, 2]"), std::string::npos);
  EXPECT_NE(ExportGap(s.graph, true).find("1: [1, 2]\n2:\n"), std::string::npos);
  EXPECT_EQ(gap.front(), '#');
}

TEST(ExploreTest, Gosset321ComponentHasTwoBoundedTypes) {
  const ExplorationState s = RunToCompletion({Gosset321Seed()});
  std::vector<std::size_t> sizes;
  for (const GraphNode& n : s.graph.nodes)
    if (n.record.bounded) sizes.push_back(n.record.vertices.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{56, 35}));
  EXPECT_TRUE(s.unbounded_ridges.empty());
  EXPECT_NE(ExportGap(s.graph).find("1: [1, 2]\n2: [2, 1]\n"), std::string::npos);
}

TEST(ExploreTest, EdgesShareQrankTwoRidges) {
  for (const auto& seed : {SegmentSeed(), Gosset221Seed()}) {
    const ExplorationState s = RunToCompletion({seed});
    for (const GraphEdge& e : s.graph.edges) {
      EXPECT_EQ(Qrank(e.ridge, s.graph.dim), 2u);
      // The ridge is a vertex subset of the source record.
      const auto& v = s.graph.nodes[e.source].record.vertices;
      for (const Point& p : e.ridge) EXPECT_TRUE(std::binary_search(v.begin(), v.end(), p));
    }
  }
}

TEST(ExploreTest, ZeroFlipLimitKeepsSeedsOnly) {
  ExploreLimits limits;
  limits.max_flips = 0;
  ExplorationState s = InitialState({Gosset221Seed()});
  EXPECT_EQ(Explore(s, limits), StopReason::kMaxFlips);
  EXPECT_EQ(s.graph.nodes.size(), 1u);
  EXPECT_TRUE(s.graph.edges.empty());
  EXPECT_EQ(ExportGap(s.graph), "1:\n");
}

TEST(ExploreTest, NodeLimitStopsBeforeAdding) {
  ExploreLimits limits;
  limits.max_nodes = 1;
  ExplorationState s = InitialState({Gosset221Seed()});
  EXPECT_EQ(Explore(s, limits), StopReason::kMaxNodes);
  EXPECT_EQ(s.graph.nodes.size(), 1u);
  EXPECT_EQ(s.flips, 0u);
}

TEST(ExploreTest, InterruptFlagStopsCleanly) {
  std::atomic<bool> stop{true};
  ExplorationState s = InitialState({SegmentSeed()});
  EXPECT_EQ(Explore(s, {}, {}, &stop), StopReason::kInterrupted);
  EXPECT_EQ(s.flips, 0u);
  stop = false;
  EXPECT_EQ(Explore(s, {}, {}, &stop), StopReason::kComplete);
  EXPECT_EQ(ExportGap(s.graph), "1: [1, 1]\n");
}

TEST(ExploreTest, DeterministicAcrossRunsAndThreadCounts) {
  const ExplorationState a = RunToCompletion({Gosset221Seed()});
  ExploreLimits limits;
  limits.threads = 4;
  const ExplorationState b = RunToCompletion({Gosset221Seed()}, limits);
  EXPECT_EQ(GraphToJson(a.graph).dump(), GraphToJson(b.graph).dump());
  EXPECT_EQ(ExportGap(a.graph, true), ExportGap(b.graph, true));
}

TEST(ExploreTest, ResumeAtEveryFlipBoundaryMatchesUninterruptedRun) {
  const ExplorationState full = RunToCompletion({Gosset221Seed()});
  const std::string expected = StateToJson(full).dump();
  for (std::size_t cut = 0; cut <= full.flips; ++cut) {
    ExploreLimits limits;
    limits.max_flips = cut;
    ExplorationState partial = InitialState({Gosset221Seed()});
    Explore(partial, limits);
    ExplorationState resumed = StateFromJson(StateToJson(partial));
    EXPECT_EQ(StateToJson(resumed).dump(), StateToJson(partial).dump());
    Explore(resumed, {});
    EXPECT_EQ(StateToJson(resumed).dump(), expected) << "cut " << cut;
  }
}

TEST(ExploreTest, SeedsEquivalentUpToAffineMapsCollapse) {
  std::mt19937_64 rng(101);
  const PolytopeRecord p = Gosset221Seed();
  const ExplorationState s = InitialState({p, Transform(p, RandomAffine(6, rng))});
  EXPECT_EQ(s.graph.nodes.size(), 1u);
  EXPECT_THROW(InitialState({p, SegmentSeed()}), std::invalid_argument);
}

TEST(ExploreTest, TransformedSeedGivesIsomorphicGraph) {
  std::mt19937_64 rng(102);
  const ExplorationState base = RunToCompletion({Gosset221Seed()});
  for (int t = 0; t < 3; ++t) {
    const ExplorationState s = RunToCompletion({Transform(Gosset221Seed(), RandomAffine(6, rng))});
    ASSERT_EQ(s.graph.nodes.size(), base.graph.nodes.size());
    for (std::size_t i = 0; i < s.graph.nodes.size(); ++i)
      EXPECT_EQ(s.graph.nodes[i].key, base.graph.nodes[i].key);
    EXPECT_EQ(ExportGap(s.graph, true), ExportGap(base.graph, true));
  }
}

TEST(ExploreTest, StateRejectsUnknownFormat) {
  auto j = StateToJson(InitialState({SegmentSeed()}));
  j["format"] = "pdel-state/99";
  EXPECT_THROW(StateFromJson(j), std::invalid_argument);
}

TEST(ExploreTest, ValidateSeedDiagnostics) {
  const auto ok = ValidateSeed(WriteTemp("pdel_seg.json", ToJson(SegmentSeed()).dump()));
  ASSERT_TRUE(std::holds_alternative<PolytopeRecord>(ok));

  const auto bad = ValidateSeed(WriteTemp("pdel_bad.json", "{\"dim\": 1,"));
  ASSERT_TRUE(std::holds_alternative<Diagnostic>(bad));
  EXPECT_EQ(std::get<Diagnostic>(bad).kind, Diagnostic::Kind::kParse);

  const auto missing = ValidateSeed("/nonexistent/pdel.json");
  ASSERT_TRUE(std::holds_alternative<Diagnostic>(missing));
  EXPECT_EQ(std::get<Diagnostic>(missing).kind, Diagnostic::Kind::kParse);

  PolytopeRecord square;
  square.dim = 2;
  square.vertices = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  square.function = QuadraticFunction(Mat::Identity(2), RatVec{-1, -1}, 0);
  const auto d = ValidateRecord(square);
  ASSERT_TRUE(std::holds_alternative<Diagnostic>(d));
  EXPECT_EQ(std::get<Diagnostic>(d).kind, Diagnostic::Kind::kCertificate);
  EXPECT_EQ(std::get<Diagnostic>(d).message, "qrank = 2, not perfect");

  // A vertex list that misses a zero of the function.
  PolytopeRecord partial = SegmentSeed();
  partial.vertices.pop_back();
  ASSERT_TRUE(std::holds_alternative<Diagnostic>(ValidateRecord(partial)));

  // A function that is negative somewhere.
  PolytopeRecord negative = SegmentSeed();
  negative.function = QuadraticFunction(Mat{{1}}, RatVec{-3}, 2);
  negative.vertices = {{1}, {2}};
  ASSERT_TRUE(std::holds_alternative<PolytopeRecord>(ValidateRecord(negative)));
  negative.function = QuadraticFunction(Mat{{1}}, RatVec{-4}, 3);
  negative.vertices = {{1}, {3}};
  ASSERT_TRUE(std::holds_alternative<Diagnostic>(ValidateRecord(negative)));
}

TEST(ExploreTest, FormatJsonKeepsScalarArraysInline) {
  nlohmann::ordered_json j;
  j["a"] = nlohmann::ordered_json::array({1, 2});
  j["b"] = nlohmann::ordered_json::array({nlohmann::ordered_json::array({3})});
  EXPECT_EQ(FormatJson(j), "{\n  \"a\": [1, 2],\n  \"b\": [\n    [3]\n  ]\n}\n");
  EXPECT_EQ(nlohmann::ordered_json::parse(FormatJson(j)), j);
}

}  // namespace
}  // namespace pdel
