// Copyright 2026 The HICODE Authors
//
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

#include "hicode/detectors.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "hicode/error.h"
#include "hicode/metrics.h"
#include "hicode/random.h"
#include "hicode/synthgen.h"
#include "expect_error.h"
#include "test_graphs.h"

namespace hicode {
namespace {

using ::hicode::testing::AddClique;
using ::hicode::testing::ErrorCodeOf;
using ::hicode::testing::MakeGraph;
using ::hicode::testing::RandomGraph;
using ::hicode::testing::TwoCliquesWithBridge;
using ::hicode::testing::TwoTriangles;

std::vector<int32_t> Labels(const Layer& layer) {
  return {layer.assignment().begin(), layer.assignment().end()};
}

TEST(LouvainTest, SplitsTwoCliquesAtTheBridge) {
  const Graph g = TwoCliquesWithBridge();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Layer layer = LouvainDetect(g, seed);
    EXPECT_EQ(layer, Layer(std::vector<int32_t>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1}))
        << "seed " << seed;
    EXPECT_NEAR(Modularity(g, layer), 20.0 / 21.0 - 0.5, 1e-12);
  }
}

TEST(LouvainTest, ResultIsLocallyOptimal) {
  const Graph g = TwoCliquesWithBridge();
  const Layer layer = LouvainDetect(g, 4);
  const double q = Modularity(g, layer);
  std::vector<int32_t> labels = Labels(layer);
  // No single-node move to another existing community or a fresh singleton.
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (int32_t target = 0; target <= layer.num_communities(); ++target) {
      std::vector<int32_t> moved = labels;
      moved[u] = target;
      EXPECT_LE(Modularity(g, Layer(moved)), q + 1e-12);
    }
  }
  // No pairwise merge.
  std::vector<int32_t> merged = labels;
  for (int32_t& c : merged) c = 0;
  EXPECT_LE(Modularity(g, Layer(merged)), q + 1e-12);
}

TEST(LouvainTest, BeatsEveryTwoWaySplitOfTwoTriangles) {
  const Graph g = TwoTriangles();
  const double q = Modularity(g, LouvainDetect(g, 1));
  for (int mask = 1; mask < (1 << 6) - 1; ++mask) {
    std::vector<int32_t> labels(6);
    for (int u = 0; u < 6; ++u) labels[u] = (mask >> u) & 1;
    EXPECT_GE(q + 1e-12, Modularity(g, Layer(labels)));
  }
}

TEST(LouvainTest, DeterministicPerSeed) {
  Rng rng(8);
  const Graph g = RandomGraph(rng, 300, 0.03, /*weighted=*/true);
  for (uint64_t seed : {0ull, 7ull, 123456789ull}) {
    EXPECT_EQ(LouvainDetect(g, seed), LouvainDetect(g, seed));
  }
}

TEST(LouvainTest, NeverWorseThanSingletonsOrZero) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const NodeId n = 5 + static_cast<NodeId>(rng.UniformInt(150));
    const Graph g = RandomGraph(rng, n, 0.08, /*weighted=*/trial % 2 == 0);
    if (g.total_weight() == 0.0) continue;
    const Layer layer = LouvainDetect(g, trial);
    ASSERT_EQ(layer.num_nodes(), n);
    const double q = Modularity(g, layer);
    EXPECT_GE(q, -1e-12);
    EXPECT_GE(q + 1e-12, Modularity(g, Layer::Singletons(n)));
  }
}

TEST(LouvainTest, PowerOfTwoWeightScalingKeepsPartition) {
  Rng rng(12);
  const Graph g = RandomGraph(rng, 200, 0.05, /*weighted=*/true);
  const Layer base = LouvainDetect(g, 5);
  for (double scale : {0.25, 2.0, 64.0}) {
    std::vector<double> w;
    for (const Edge& e : g.edges()) w.push_back(e.weight * scale);
    EXPECT_EQ(LouvainDetect(g.WithEdgeWeights(w), 5), base) << scale;
  }
}

TEST(LouvainTest, IsolatedNodesStaySingletons) {
  const Graph g = MakeGraph({{0, 1}, {1, 2}, {0, 2}}, 5);
  const Layer layer = LouvainDetect(g, 0);
  EXPECT_EQ(layer.num_communities(), 3);
  EXPECT_NE(layer.community_of(3), layer.community_of(4));
}

TEST(LouvainTest, EmptyGraphThrows) {
  EXPECT_EQ(ErrorCodeOf([] { LouvainDetect(MakeGraph({}), 0); }),
            ErrorCode::kEmptyGraph);
}

TEST(LouvainTest, FindsTheDominantSynL2Layer) {
  const Preset preset = SynL2Preset();
  const SyntheticInstance inst = Generate(preset.num_nodes, preset.layers, 1);
  const Layer layer = LouvainDetect(inst.graph, 1);
  const double nmi1 = Nmi(layer, inst.planted[0]);
  const double nmi2 = Nmi(layer, inst.planted[1]);
  EXPECT_GE(nmi1, 0.70);
  EXPECT_GT(nmi1, nmi2);
}

TEST(LabelPropagationTest, SplitsTwoTriangles) {
  const Graph g = TwoTriangles();
  for (uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(LabelPropagationDetect(g, seed),
              Layer(std::vector<int32_t>{0, 0, 0, 1, 1, 1}))
        << "seed " << seed;
  }
}

TEST(LabelPropagationTest, StarCollapses) {
  const Graph g = MakeGraph({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  for (uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(LabelPropagationDetect(g, seed).num_communities(), 1)
        << "seed " << seed;
  }
}

TEST(LabelPropagationTest, IgnoresWeights) {
  std::vector<Edge> edges;
  AddClique(edges, 0, 4);
  AddClique(edges, 4, 4);
  edges.push_back({3, 4, 1.0});
  const Graph g = MakeGraph(edges);
  std::vector<double> w;
  for (size_t i = 0; i < g.edges().size(); ++i) w.push_back(1.0 + i % 3);
  EXPECT_EQ(LabelPropagationDetect(g, 3),
            LabelPropagationDetect(g.WithEdgeWeights(w), 3));
}

TEST(LabelPropagationTest, EmptyGraphThrows) {
  EXPECT_EQ(ErrorCodeOf([] { LabelPropagationDetect(MakeGraph({}), 0); }),
            ErrorCode::kEmptyGraph);
}

TEST(DetectorFactoryTest, KnownAndUnknownNames) {
  EXPECT_EQ(MakeDetector("louvain")->name(), "louvain");
  EXPECT_TRUE(MakeDetector("louvain")->supports_weights());
  EXPECT_EQ(MakeDetector("labelprop")->name(), "labelprop");
  EXPECT_FALSE(MakeDetector("labelprop")->supports_weights());
  EXPECT_EQ(ErrorCodeOf([] { MakeDetector("infomap"); }),
            ErrorCode::kConfigError);
  EXPECT_EQ(DetectorNames().size(), 2u);
}

}  // namespace
}  // namespace hicode
