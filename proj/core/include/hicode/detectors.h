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

#ifndef HICODE_DETECTORS_H_
#define HICODE_DETECTORS_H_

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "hicode/graph.h"
#include "hicode/layer.h"

namespace hicode {

// A base community-detection algorithm. Implementations are stateless: the
// same (graph, seed) always yields the same layer, and concurrent Detect calls
// on shared graphs are safe.
class Detector {
 public:
  virtual ~Detector() = default;

  virtual std::string_view name() const = 0;
  // Whether edge weights influence the result. Weight-blind detectors cannot
  // be paired with the reduce-weight operator.
  virtual bool supports_weights() const = 0;
  // Returns a full partition of g's nodes. Throws Error(kEmptyGraph) when g
  // has no nodes.
  virtual Layer Detect(const Graph& g, uint64_t seed) const = 0;
};

// Multi-level greedy modularity maximization (Louvain). Nodes are visited in
// a seeded random order that is reshuffled on every pass; a node moves only if
// the move raises modularity by more than 1e-9, so equal-gain alternatives
// keep the current community. Levels are aggregated until a level produces no
// merge.
Layer LouvainDetect(const Graph& g, uint64_t seed);

// Synchronous label propagation ignoring weights. Each node adopts the most
// frequent label in its closed neighborhood (itself included); ties are broken
// uniformly at random from the seeded stream. Stops once every node holds the
// unique majority label of its neighborhood, or after
// kLabelPropagationMaxRounds rounds.
inline constexpr int kLabelPropagationMaxRounds = 100;
Layer LabelPropagationDetect(const Graph& g, uint64_t seed);

class LouvainDetector final : public Detector {
 public:
  std::string_view name() const override { return "louvain"; }
  bool supports_weights() const override { return true; }
  Layer Detect(const Graph& g, uint64_t seed) const override {
    return LouvainDetect(g, seed);
  }
};

class LabelPropagationDetector final : public Detector {
 public:
  std::string_view name() const override { return "labelprop"; }
  bool supports_weights() const override { return false; }
  Layer Detect(const Graph& g, uint64_t seed) const override {
    return LabelPropagationDetect(g, seed);
  }
};

// "louvain" or "labelprop"; anything else throws Error(kConfigError).
std::unique_ptr<Detector> MakeDetector(std::string_view name);
std::vector<std::string_view> DetectorNames();

}  // namespace hicode

#endif  // HICODE_DETECTORS_H_
