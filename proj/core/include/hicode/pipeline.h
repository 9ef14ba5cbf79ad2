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

#ifndef HICODE_PIPELINE_H_
#define HICODE_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hicode/detectors.h"
#include "hicode/graph.h"
#include "hicode/layer.h"
#include "hicode/reduction.h"

namespace hicode {

struct PipelineConfig {
  std::string detector = "louvain";
  ReductionMethod reduction = ReductionMethod::kReduceWeight;
  int max_layers = 8;
  std::optional<int> fixed_layers;
  int refine_iters = 30;
  int probe_iters = 5;
  uint64_t seed = 0;
};

// Throws Error(kConfigError) on inconsistent settings, including pairing
// reduce-weight with a detector that ignores weights.
void ValidateConfig(const PipelineConfig& config);

// Layers and their modularities after one refinement sweep. Sweep 0 is the
// identification result.
struct SweepRecord {
  int sweep = 0;
  std::vector<Layer> layers;
  std::vector<double> original_modularity;
  std::vector<double> reduced_modularity;
  double mean_original = 0.0;
  double mean_reduced = 0.0;
};

// Stopping-rule inputs for one candidate layer count i.
struct SelectionRecord {
  int num_layers = 0;
  double original_initial = 0.0;  // orig_0^i
  double reduced_initial = 0.0;   // red_0^i
  double original_probe = 0.0;    // orig_5^i
  double reduced_probe = 0.0;     // red_5^i
  double delta = 0.0;             // orig_5^i / orig_0^i
  double delta_reduced = 0.0;     // red_5^i / red_0^i
  bool degenerate = false;        // a denominator was <= 0
};

enum class StopTrigger {
  kNone,               // max_layers reached
  kDeltaBelowOne,      // delta_{i+1} < 1
  kReducedDeltaDrop,   // delta'_i > delta'_{i+1}
  kDegenerate,         // non-positive modularity denominator
};
std::string_view StopTriggerName(StopTrigger trigger);

struct LayerSelection {
  int num_layers = 0;
  StopTrigger trigger = StopTrigger::kNone;
  bool truncated = false;
  std::vector<SelectionRecord> records;  // one per probed layer count
};

struct LayerStack {
  std::vector<Layer> layers;  // strongest first
  std::vector<double> original_modularity;
  std::vector<double> reduced_modularity;
  int selected_sweep = 0;
  std::vector<SweepRecord> trace;
  std::optional<LayerSelection> selection;
};

// Modularity of `layers[i]` in the graph obtained by reducing every other
// layer of `layers` from `graph`, for every i.
std::vector<double> ReducedModularities(const Graph& graph,
                                        std::span<const Layer> layers,
                                        const PipelineConfig& config,
                                        uint64_t seed);

// Detects a layer, reduces it from the running graph, and repeats until
// `num_layers` layers are found. The result carries a single sweep-0 trace
// record.
LayerStack Identify(const Graph& graph, const PipelineConfig& config,
                    int num_layers);

// Runs config.refine_iters Gauss-Seidel sweeps: for each layer i, reduce all
// other layers (latest versions) from the original graph and re-detect layer
// i. Returns the sweep with the highest mean reduced-graph modularity, and
// the whole trace.
LayerStack Refine(const Graph& graph, LayerStack stack,
                  const PipelineConfig& config);

// Increases the number of layers from 2 and stops at the first i where
// delta_{i+1} < 1 or delta'_i > delta'_{i+1}.
LayerSelection SelectNumLayers(const Graph& graph, const PipelineConfig& config);

// Layer-count selection (unless fixed_layers is set), identification and
// refinement.
LayerStack RunHicode(const Graph& graph, const PipelineConfig& config);

// Identification with remove-edge reduction and no refinement, using
// config.fixed_layers layers (required).
LayerStack RunCascade(const Graph& graph, const PipelineConfig& config);

// NMI of each traced layer against truth[i] (when present), per sweep.
std::vector<std::vector<double>> NmiTrace(const LayerStack& stack,
                                          std::span<const Layer> truth);

}  // namespace hicode

#endif  // HICODE_PIPELINE_H_
