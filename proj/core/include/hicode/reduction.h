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

#ifndef HICODE_REDUCTION_H_
#define HICODE_REDUCTION_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hicode/graph.h"
#include "hicode/layer.h"

namespace hicode {

enum class ReductionMethod { kRemoveEdge, kReduceEdge, kReduceWeight };

// CLI spelling: "remove", "reduce-edge", "reduce-weight".
std::string_view ReductionMethodName(ReductionMethod method);
// Throws Error(kConfigError) for unknown names.
ReductionMethod ParseReductionMethod(std::string_view name);

struct ReductionSpec {
  ReductionMethod method = ReductionMethod::kReduceWeight;
  uint64_t seed = 0;  // only read by kReduceEdge
};

// Intra-community density of C versus the background density outside it,
// both computed on weights (e_C -> w_C, e -> total weight):
//   p_C   = w_C / (n_C (n_C - 1) / 2)
//   q_C   = (W - w_C) / ((n (n - 1) - n_C (n_C - 1)) / 2)
//   ratio = clamp(q_C / p_C, 0, 1)
// A community is reduced only when `applies` is set, i.e. n_C >= 2, p_C > 0
// and p_C > q_C. When the background has no node pairs (C spans the graph)
// ratio is 0.
struct CommunityDensities {
  double intra_density = 0.0;       // p_C
  double background_density = 0.0;  // q_C
  double ratio = 1.0;
  bool applies = false;
};

std::vector<CommunityDensities> ComputeDensities(const Graph& graph,
                                                 const Layer& layer);

// Deletes every edge whose endpoints share a community.
Graph RemoveEdgeReduce(const Graph& graph, const Layer& layer);

// Keeps each intra-community edge of a reducible community independently with
// probability ratio. The random stream of community c is seeded from
// (seed, c), so results do not depend on traversal order. Throws
// Error(kHeterogeneousWeights) unless all edges share one weight.
Graph ReduceEdgeReduce(const Graph& graph, const Layer& layer, uint64_t seed);

// Multiplies every intra-community edge weight of a reducible community by its
// ratio, bringing its weighted density down to the background density.
Graph ReduceWeightReduce(const Graph& graph, const Layer& layer);

Graph Reduce(const Graph& graph, const Layer& layer, const ReductionSpec& spec);

}  // namespace hicode

#endif  // HICODE_REDUCTION_H_
