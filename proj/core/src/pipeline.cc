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
#include <numeric>
#include <string>

#include "hicode/error.h"
#include "hicode/metrics.h"
#include "hicode/random.h"

namespace hicode {

std::string_view StopTriggerName(StopTrigger trigger) {
  switch (trigger) {
    case StopTrigger::kNone:
      return "none";
    case StopTrigger::kDeltaBelowOne:
      return "delta_below_one";
    case StopTrigger::kReducedDeltaDrop:
      return "reduced_delta_drop";
    case StopTrigger::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

void ValidateConfig(const PipelineConfig& config) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kConfigError, msg);
  };
  const std::unique_ptr<Detector> detector = MakeDetector(config.detector);
  if (config.reduction == ReductionMethod::kReduceWeight &&
      !detector->supports_weights()) {
    fail("reduce-weight needs a weight-aware detector; '" + config.detector +
         "' ignores weights");
  }
  if (config.max_layers < 2) fail("max_layers must be at least 2");
  if (config.refine_iters < 0) fail("refine_iters must be non-negative");
  if (config.probe_iters < 0 || config.probe_iters > config.refine_iters) {
    fail("probe_iters must lie in 0..refine_iters");
  }
  if (config.fixed_layers) {
    if (*config.fixed_layers < 1 || *config.fixed_layers > config.max_layers) {
      fail("fixed_layers must lie in 1..max_layers");
    }
  } else if (config.probe_iters < 1) {
    fail("automatic layer selection needs probe_iters >= 1");
  }
}

namespace {

// Seeds are derived as SplitSeed(master, stage, {...}); `round` is the sweep
// index (0 for identification) and `probe` the candidate layer count when
// probing, 0 otherwise.
struct SeedPlan {
  uint64_t master;
  uint64_t probe;

  uint64_t Detect(SeedStage stage, uint64_t round, uint64_t layer) const {
    return SplitSeed(master, stage, {probe, round, layer});
  }
  uint64_t ReduceFor(SeedStage stage, uint64_t round, uint64_t layer) const {
    return SplitSeed(master, SeedStage::kReduceEdge,
                     {static_cast<uint64_t>(stage), probe, round, layer});
  }
};

double SafeModularity(const Graph& graph, const Layer& layer) {
  return graph.total_weight() > 0.0 ? Modularity(graph, layer) : 0.0;
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

// Reduces every layer except `skip` from `graph`, in layer order.
Graph ReduceOthers(const Graph& graph, std::span<const Layer> layers,
                   size_t skip, ReductionMethod method, uint64_t seed) {
  Graph running = graph;
  for (size_t j = 0; j < layers.size(); ++j) {
    if (j == skip) continue;
    running = Reduce(running, layers[j],
                     {method, SplitSeed(seed, SeedStage::kReduceEdge, {j})});
  }
  return running;
}

SweepRecord MakeRecord(const Graph& graph, int sweep, std::vector<Layer> layers,
                       const PipelineConfig& config, uint64_t measure_seed) {
  SweepRecord rec;
  rec.sweep = sweep;
  rec.layers = std::move(layers);
  for (const Layer& layer : rec.layers) {
    rec.original_modularity.push_back(SafeModularity(graph, layer));
  }
  rec.reduced_modularity =
      ReducedModularities(graph, rec.layers, config, measure_seed);
  rec.mean_original = Mean(rec.original_modularity);
  rec.mean_reduced = Mean(rec.reduced_modularity);
  return rec;
}

// Identification of layers [have, want) continuing from `layers`, where
// `running` is the graph with layers [0, have) already reduced.
void ExtendIdentification(const Detector& detector, const PipelineConfig& config,
                          const SeedPlan& seeds, int want,
                          std::vector<Layer>& layers, Graph& running) {
  for (int i = static_cast<int>(layers.size()); i < want; ++i) {
    layers.push_back(detector.Detect(running, seeds.Detect(SeedStage::kIdentify,
                                                           0, i)));
    if (i + 1 < want) {
      running = Reduce(running, layers.back(),
                       {config.reduction,
                        seeds.ReduceFor(SeedStage::kIdentify, 0, i)});
    }
  }
}

// Runs `sweeps` refinement sweeps starting from `layers` and returns one
// record per sweep (sweep numbers 1..sweeps).
std::vector<SweepRecord> Sweep(const Graph& graph, const Detector& detector,
                               const PipelineConfig& config,
                               const SeedPlan& seeds, SeedStage stage,
                               std::vector<Layer> layers, int sweeps) {
  std::vector<SweepRecord> records;
  records.reserve(sweeps);
  for (int s = 1; s <= sweeps; ++s) {
    for (size_t i = 0; i < layers.size(); ++i) {
      const Graph reduced = ReduceOthers(graph, layers, i, config.reduction,
                                         seeds.ReduceFor(stage, s, i));
      layers[i] = detector.Detect(reduced, seeds.Detect(stage, s, i));
    }
    records.push_back(MakeRecord(graph, s, layers, config,
                                 seeds.ReduceFor(stage, s, layers.size())));
  }
  return records;
}

LayerStack StackFromRecord(const SweepRecord& rec) {
  LayerStack stack;
  stack.layers = rec.layers;
  stack.original_modularity = rec.original_modularity;
  stack.reduced_modularity = rec.reduced_modularity;
  stack.selected_sweep = rec.sweep;
  return stack;
}

SelectionRecord Evaluate(int num_layers, const SweepRecord& initial,
                         std::span<const SweepRecord> probes) {
  SelectionRecord rec;
  rec.num_layers = num_layers;
  rec.original_initial = initial.mean_original;
  rec.reduced_initial = initial.mean_reduced;
  for (const SweepRecord& p : probes) {
    rec.original_probe += p.mean_original;
    rec.reduced_probe += p.mean_reduced;
  }
  rec.original_probe /= static_cast<double>(probes.size());
  rec.reduced_probe /= static_cast<double>(probes.size());
  rec.degenerate = rec.original_initial <= 0.0 || rec.reduced_initial <= 0.0;
  if (!rec.degenerate) {
    rec.delta = rec.original_probe / rec.original_initial;
    rec.delta_reduced = rec.reduced_probe / rec.reduced_initial;
  }
  return rec;
}

}  // namespace

std::vector<double> ReducedModularities(const Graph& graph,
                                        std::span<const Layer> layers,
                                        const PipelineConfig& config,
                                        uint64_t seed) {
  std::vector<double> out;
  out.reserve(layers.size());
  for (size_t i = 0; i < layers.size(); ++i) {
    const Graph reduced =
        ReduceOthers(graph, layers, i, config.reduction,
                     SplitSeed(seed, SeedStage::kReduceEdge, {i}));
    out.push_back(SafeModularity(reduced, layers[i]));
  }
  return out;
}

LayerStack Identify(const Graph& graph, const PipelineConfig& config,
                    int num_layers) {
  ValidateConfig(config);
  if (num_layers < 1) {
    throw Error(ErrorCode::kConfigError, "need at least one layer");
  }
  const std::unique_ptr<Detector> detector = MakeDetector(config.detector);
  const SeedPlan seeds{config.seed, 0};
  std::vector<Layer> layers;
  Graph running = graph;
  ExtendIdentification(*detector, config, seeds, num_layers, layers, running);
  SweepRecord rec =
      MakeRecord(graph, 0, std::move(layers), config,
                 seeds.ReduceFor(SeedStage::kIdentify, 0, num_layers));
  LayerStack stack = StackFromRecord(rec);
  stack.trace.push_back(std::move(rec));
  return stack;
}

LayerStack Refine(const Graph& graph, LayerStack stack,
                  const PipelineConfig& config) {
  ValidateConfig(config);
  if (config.refine_iters == 0) return stack;
  const std::unique_ptr<Detector> detector = MakeDetector(config.detector);
  std::vector<SweepRecord> records =
      Sweep(graph, *detector, config, SeedPlan{config.seed, 0},
            SeedStage::kRefine, stack.layers, config.refine_iters);
  // Earliest sweep wins ties.
  size_t best = 0;
  for (size_t s = 1; s < records.size(); ++s) {
    if (records[s].mean_reduced > records[best].mean_reduced) best = s;
  }
  LayerStack out = StackFromRecord(records[best]);
  out.selection = std::move(stack.selection);
  out.trace = std::move(stack.trace);
  std::move(records.begin(), records.end(), std::back_inserter(out.trace));
  return out;
}

LayerSelection SelectNumLayers(const Graph& graph, const PipelineConfig& config) {
  ValidateConfig(config);
  if (config.probe_iters < 1) {
    throw Error(ErrorCode::kConfigError,
                "automatic layer selection needs probe_iters >= 1");
  }
  const std::unique_ptr<Detector> detector = MakeDetector(config.detector);
  // Identification of i + 1 layers extends identification of i layers with
  // the same seeds, so one running graph serves every candidate count.
  const SeedPlan identify_seeds{config.seed, 0};
  std::vector<Layer> identified;
  Graph running = graph;

  auto probe = [&](int num_layers) {
    ExtendIdentification(*detector, config, identify_seeds, num_layers,
                         identified, running);
    const SeedPlan seeds{config.seed, static_cast<uint64_t>(num_layers)};
    const std::vector<Layer> layers(identified.begin(),
                                    identified.begin() + num_layers);
    const SweepRecord initial =
        MakeRecord(graph, 0, layers, config,
                   seeds.ReduceFor(SeedStage::kProbeIdentify, 0, num_layers));
    const std::vector<SweepRecord> probes =
        Sweep(graph, *detector, config, seeds, SeedStage::kProbeRefine, layers,
              config.probe_iters);
    return Evaluate(num_layers, initial, probes);
  };

  LayerSelection selection;
  selection.records.push_back(probe(2));
  for (int i = 2; i < config.max_layers; ++i) {
    selection.records.push_back(probe(i + 1));
    const SelectionRecord& cur = selection.records[i - 2];
    const SelectionRecord& next = selection.records[i - 1];
    StopTrigger trigger = StopTrigger::kNone;
    if (cur.degenerate || next.degenerate) {
      trigger = StopTrigger::kDegenerate;
    } else if (next.delta < 1.0) {
      trigger = StopTrigger::kDeltaBelowOne;
    } else if (cur.delta_reduced > next.delta_reduced) {
      trigger = StopTrigger::kReducedDeltaDrop;
    }
    if (trigger != StopTrigger::kNone) {
      selection.num_layers = i;
      selection.trigger = trigger;
      return selection;
    }
  }
  selection.num_layers = config.max_layers;
  selection.truncated = true;
  return selection;
}

LayerStack RunHicode(const Graph& graph, const PipelineConfig& config) {
  ValidateConfig(config);
  std::optional<LayerSelection> selection;
  int num_layers = 0;
  if (config.fixed_layers) {
    num_layers = *config.fixed_layers;
  } else {
    selection = SelectNumLayers(graph, config);
    num_layers = selection->num_layers;
  }
  LayerStack stack = Identify(graph, config, num_layers);
  stack.selection = std::move(selection);
  return Refine(graph, std::move(stack), config);
}

LayerStack RunCascade(const Graph& graph, const PipelineConfig& config) {
  if (!config.fixed_layers) {
    throw Error(ErrorCode::kConfigError,
                "cascade needs a fixed number of layers");
  }
  PipelineConfig cascade = config;
  cascade.reduction = ReductionMethod::kRemoveEdge;
  return Identify(graph, cascade, *config.fixed_layers);
}

std::vector<std::vector<double>> NmiTrace(const LayerStack& stack,
                                          std::span<const Layer> truth) {
  std::vector<std::vector<double>> out;
  out.reserve(stack.trace.size());
  for (const SweepRecord& rec : stack.trace) {
    std::vector<double> row;
    for (size_t i = 0; i < rec.layers.size() && i < truth.size(); ++i) {
      row.push_back(Nmi(rec.layers[i], truth[i]));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hicode
