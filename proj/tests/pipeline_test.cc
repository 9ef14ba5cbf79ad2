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

#include "hicode/pipeline.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "hicode/detectors.h"
#include "hicode/error.h"
#include "hicode/metrics.h"
#include "hicode/random.h"
#include "hicode/reduction.h"
#include "hicode/synthgen.h"
#include "expect_error.h"
#include "test_graphs.h"

namespace hicode {
namespace {

using ::hicode::testing::ErrorCodeOf;
using ::hicode::testing::MakeGraph;

// A small two-layer planted graph that runs in well under a second.
SyntheticInstance SmallTwoLayer(uint64_t seed) {
  const std::vector<LayerSpec> specs = {{20, 0.3}, {10, 0.1}};
  return Generate(600, specs, seed);
}

PipelineConfig SmallConfig() {
  PipelineConfig config;
  config.refine_iters = 6;
  config.probe_iters = 2;
  config.max_layers = 4;
  config.seed = 3;
  return config;
}

TEST(IdentifyTest, OneLayerIsTheBareDetector) {
  const SyntheticInstance inst = SmallTwoLayer(1);
  const PipelineConfig config = SmallConfig();
  const LayerStack stack = Identify(inst.graph, config, 1);
  ASSERT_EQ(stack.layers.size(), 1u);
  EXPECT_EQ(stack.layers[0],
            LouvainDetect(inst.graph,
                          SplitSeed(config.seed, SeedStage::kIdentify, {0, 0, 0})));
  EXPECT_NEAR(stack.original_modularity[0],
              Modularity(inst.graph, stack.layers[0]), 1e-12);
  // With a single layer nothing is reduced before measuring.
  EXPECT_EQ(stack.original_modularity[0], stack.reduced_modularity[0]);
  ASSERT_EQ(stack.trace.size(), 1u);
  EXPECT_EQ(stack.trace[0].sweep, 0);
}

TEST(IdentifyTest, SecondLayerIsDetectedOnTheReducedGraph) {
  const SyntheticInstance inst = SmallTwoLayer(2);
  PipelineConfig config = SmallConfig();
  for (ReductionMethod method :
       {ReductionMethod::kRemoveEdge, ReductionMethod::kReduceWeight}) {
    config.reduction = method;
    const LayerStack stack = Identify(inst.graph, config, 2);
    const Graph reduced = Reduce(inst.graph, stack.layers[0], {method, 0});
    EXPECT_EQ(stack.layers[1],
              LouvainDetect(reduced, SplitSeed(config.seed, SeedStage::kIdentify,
                                               {0, 0, 1})));
  }
}

TEST(CascadeTest, IsRemoveEdgeIdentification) {
  const SyntheticInstance inst = SmallTwoLayer(3);
  PipelineConfig config = SmallConfig();
  config.fixed_layers = 2;
  const LayerStack cascade = RunCascade(inst.graph, config);
  config.reduction = ReductionMethod::kRemoveEdge;
  const LayerStack identify = Identify(inst.graph, config, 2);
  EXPECT_EQ(cascade.layers, identify.layers);
  EXPECT_EQ(cascade.trace.size(), 1u);

  config.fixed_layers.reset();
  EXPECT_EQ(ErrorCodeOf([&] { RunCascade(inst.graph, config); }),
            ErrorCode::kConfigError);
}

TEST(RefineTest, ZeroSweepsReturnsIdentification) {
  const SyntheticInstance inst = SmallTwoLayer(4);
  PipelineConfig config = SmallConfig();
  config.refine_iters = 0;
  config.probe_iters = 0;
  config.fixed_layers = 2;
  const LayerStack identified = Identify(inst.graph, config, 2);
  const LayerStack refined = Refine(inst.graph, identified, config);
  EXPECT_EQ(refined.layers, identified.layers);
  EXPECT_EQ(refined.selected_sweep, 0);
  EXPECT_EQ(refined.trace.size(), 1u);
}

TEST(RefineTest, SelectsTheSweepWithHighestMeanReducedModularity) {
  const SyntheticInstance inst = SmallTwoLayer(5);
  PipelineConfig config = SmallConfig();
  config.fixed_layers = 2;
  const LayerStack stack = RunHicode(inst.graph, config);
  ASSERT_EQ(stack.trace.size(), 1u + config.refine_iters);
  int best = 1;
  for (int s = 1; s <= config.refine_iters; ++s) {
    EXPECT_EQ(stack.trace[s].sweep, s);
    if (stack.trace[s].mean_reduced > stack.trace[best].mean_reduced) best = s;
  }
  EXPECT_EQ(stack.selected_sweep, best);
  EXPECT_EQ(stack.layers, stack.trace[best].layers);
  EXPECT_EQ(stack.reduced_modularity, stack.trace[best].reduced_modularity);
  EXPECT_FALSE(stack.selection.has_value());
}

TEST(RefineTest, TraceRecordsAreConsistent) {
  const SyntheticInstance inst = SmallTwoLayer(6);
  PipelineConfig config = SmallConfig();
  config.fixed_layers = 2;
  const LayerStack stack = RunHicode(inst.graph, config);
  for (const SweepRecord& rec : stack.trace) {
    ASSERT_EQ(rec.layers.size(), 2u);
    for (size_t i = 0; i < rec.layers.size(); ++i) {
      EXPECT_EQ(rec.layers[i].num_nodes(), inst.graph.num_nodes());
      EXPECT_NEAR(rec.original_modularity[i],
                  Modularity(inst.graph, rec.layers[i]), 1e-12);
    }
    const std::vector<double> reduced =
        ReducedModularities(inst.graph, rec.layers, config, 0);
    for (size_t i = 0; i < reduced.size(); ++i) {
      EXPECT_NEAR(rec.reduced_modularity[i], reduced[i], 1e-12);
    }
    EXPECT_NEAR(rec.mean_reduced,
                (rec.reduced_modularity[0] + rec.reduced_modularity[1]) / 2,
                1e-12);
  }
}

TEST(RefineTest, RecoversBothPlantedLayers) {
  const SyntheticInstance inst = SmallTwoLayer(7);
  PipelineConfig config = SmallConfig();
  config.fixed_layers = 2;
  const LayerStack stack = RunHicode(inst.graph, config);
  EXPECT_GE(Nmi(stack.layers[0], inst.planted[0]), 0.9);
  EXPECT_GE(Nmi(stack.layers[1], inst.planted[1]), 0.8);
}

TEST(RunHicodeTest, DeterministicPerSeed) {
  const SyntheticInstance inst = SmallTwoLayer(8);
  const PipelineConfig config = SmallConfig();
  const LayerStack a = RunHicode(inst.graph, config);
  const LayerStack b = RunHicode(inst.graph, config);
  EXPECT_EQ(a.layers, b.layers);
  EXPECT_EQ(a.reduced_modularity, b.reduced_modularity);
  ASSERT_TRUE(a.selection && b.selection);
  EXPECT_EQ(a.selection->num_layers, b.selection->num_layers);
}

TEST(RunHicodeTest, LabelPropagationWithStructuralReduction) {
  const SyntheticInstance inst = SmallTwoLayer(9);
  PipelineConfig config = SmallConfig();
  config.detector = "labelprop";
  config.reduction = ReductionMethod::kReduceEdge;
  config.fixed_layers = 2;
  const LayerStack stack = RunHicode(inst.graph, config);
  ASSERT_EQ(stack.layers.size(), 2u);
  for (const Layer& layer : stack.layers) {
    EXPECT_EQ(layer.num_nodes(), inst.graph.num_nodes());
  }
}

// Replays the stopping rule on the returned records.
TEST(SelectNumLayersTest, StopsAtTheFirstTriggeredCount) {
  const SyntheticInstance inst = SmallTwoLayer(10);
  for (int max_layers : {2, 3, 5}) {
    PipelineConfig config = SmallConfig();
    config.max_layers = max_layers;
    const LayerSelection sel = SelectNumLayers(inst.graph, config);
    ASSERT_FALSE(sel.records.empty());
    for (size_t r = 0; r < sel.records.size(); ++r) {
      EXPECT_EQ(sel.records[r].num_layers, static_cast<int>(r) + 2);
    }
    int want = max_layers;
    for (int i = 2; i < max_layers; ++i) {
      const SelectionRecord& cur = sel.records[i - 2];
      const SelectionRecord& next = sel.records[i - 1];
      if (cur.degenerate || next.degenerate || next.delta < 1.0 ||
          cur.delta_reduced > next.delta_reduced) {
        want = i;
        break;
      }
    }
    EXPECT_EQ(sel.num_layers, want);
    EXPECT_EQ(sel.truncated, sel.trigger == StopTrigger::kNone);
    EXPECT_EQ(static_cast<int>(sel.records.size()),
              sel.truncated ? max_layers - 1 : want);
  }
}

TEST(SelectNumLayersTest, FindsTwoLayersInSynL2) {
  const Preset preset = SynL2Preset();
  const SyntheticInstance inst = Generate(preset.num_nodes, preset.layers, 1);
  PipelineConfig config;
  config.seed = 1;
  const LayerSelection sel = SelectNumLayers(inst.graph, config);
  EXPECT_EQ(sel.num_layers, 2);
  EXPECT_EQ(sel.trigger, StopTrigger::kDeltaBelowOne);
}

// One strong planted layer plus a sprinkle of uniform noise: there is no
// hidden structure beyond the first layer, so selection stops at the minimum.
TEST(SelectNumLayersTest, SingleLayerNullModelStopsAtTwo) {
  const std::vector<LayerSpec> specs = {{100, 0.16}, {1, 1e-4}};
  const SyntheticInstance inst = Generate(3000, specs, 1);
  PipelineConfig config;
  config.seed = 1;
  const LayerSelection sel = SelectNumLayers(inst.graph, config);
  EXPECT_EQ(sel.num_layers, 2);
  EXPECT_NE(sel.trigger, StopTrigger::kNone);
}

TEST(SelectNumLayersTest, RecordsFollowTheirDefinition) {
  const SyntheticInstance inst = SmallTwoLayer(11);
  const PipelineConfig config = SmallConfig();
  for (const SelectionRecord& rec : SelectNumLayers(inst.graph, config).records) {
    if (rec.degenerate) continue;
    EXPECT_NEAR(rec.delta, rec.original_probe / rec.original_initial, 1e-12);
    EXPECT_NEAR(rec.delta_reduced, rec.reduced_probe / rec.reduced_initial,
                1e-12);
  }
}

TEST(SelectNumLayersTest, TruncatesAtMaxLayers) {
  // A graph with no community structure at all keeps every candidate
  // degenerate or flat; whichever way, the result stays within bounds.
  Rng rng(2);
  const Graph g = ::hicode::testing::RandomGraph(rng, 200, 0.05, false);
  PipelineConfig config = SmallConfig();
  config.max_layers = 3;
  const LayerSelection sel = SelectNumLayers(g, config);
  EXPECT_GE(sel.num_layers, 2);
  EXPECT_LE(sel.num_layers, 3);
  EXPECT_EQ(sel.truncated, sel.trigger == StopTrigger::kNone);
}

TEST(ConfigTest, RejectsInconsistentSettings) {
  auto code = [](auto mutate) {
    PipelineConfig config;
    mutate(config);
    return ErrorCodeOf([&] { ValidateConfig(config); });
  };
  EXPECT_EQ(code([](PipelineConfig& c) { c.detector = "labelprop"; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.detector = "walktrap"; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.max_layers = 1; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.probe_iters = 31; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.refine_iters = -1; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.fixed_layers = 9; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.fixed_layers = 0; }),
            ErrorCode::kConfigError);
  EXPECT_EQ(code([](PipelineConfig& c) { c.probe_iters = 0; }),
            ErrorCode::kConfigError);
  PipelineConfig ok;
  ok.detector = "labelprop";
  ok.reduction = ReductionMethod::kRemoveEdge;
  EXPECT_NO_THROW(ValidateConfig(ok));
}

TEST(NmiTraceTest, OneRowPerSweep) {
  const SyntheticInstance inst = SmallTwoLayer(12);
  PipelineConfig config = SmallConfig();
  config.fixed_layers = 2;
  const LayerStack stack = RunHicode(inst.graph, config);
  const auto trace = NmiTrace(stack, inst.planted);
  ASSERT_EQ(trace.size(), stack.trace.size());
  for (size_t s = 0; s < trace.size(); ++s) {
    ASSERT_EQ(trace[s].size(), 2u);
    EXPECT_DOUBLE_EQ(trace[s][0], Nmi(stack.trace[s].layers[0], inst.planted[0]));
  }
}

TEST(StopTriggerTest, Names) {
  EXPECT_EQ(StopTriggerName(StopTrigger::kDeltaBelowOne), "delta_below_one");
  EXPECT_EQ(StopTriggerName(StopTrigger::kReducedDeltaDrop),
            "reduced_delta_drop");
  EXPECT_EQ(StopTriggerName(StopTrigger::kDegenerate), "degenerate");
}

TEST(PipelineTest, EdgelessGraphIsHandled) {
  const Graph g = MakeGraph({}, 4);
  PipelineConfig config = SmallConfig();
  config.fixed_layers = 2;
  const LayerStack stack = RunHicode(g, config);
  ASSERT_EQ(stack.layers.size(), 2u);
  EXPECT_EQ(stack.original_modularity[0], 0.0);
}

}  // namespace
}  // namespace hicode
