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

#ifndef HICODE_SYNTHGEN_H_
#define HICODE_SYNTHGEN_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hicode/graph.h"
#include "hicode/layer.h"

namespace hicode {

// One planted layer: nodes are assigned uniformly at random to
// `num_communities` communities and every intra-community pair becomes an
// edge with probability `intra_p`.
struct LayerSpec {
  int32_t num_communities = 1;
  double intra_p = 0.0;
};

struct SyntheticInstance {
  Graph graph;
  std::vector<Layer> planted;
  std::vector<LayerSpec> specs;
  uint64_t seed = 0;
};

// Layers are sampled independently and their edge sets unioned; a pair drawn
// by several layers keeps weight 1. Throws Error(kInvalidParam) for n < 2,
// probabilities outside [0, 1], or community counts outside 1..n.
SyntheticInstance Generate(NodeId n, std::span<const LayerSpec> specs,
                           uint64_t seed);

// Expected edge count of Generate(n, specs, ·). A pair is co-assigned in layer
// l with probability 1/k_l independently of other layers, so
//   E[m] = C(n, 2) * (1 - prod_l (1 - p_l / k_l)).
double ExpectedEdgeCount(NodeId n, std::span<const LayerSpec> specs);

struct Preset {
  std::string_view name;
  NodeId num_nodes;
  std::vector<LayerSpec> layers;
};

// 3000 nodes; (100 communities, p = 0.16) and (50 communities, p = 0.08).
Preset SynL2Preset();
// SynL2 plus a third layer of 30 communities with p = 0.048.
Preset SynL3Preset();
// Throws Error(kInvalidParam) for names other than "synl2" and "synl3".
Preset PresetByName(std::string_view name);

}  // namespace hicode

#endif  // HICODE_SYNTHGEN_H_
