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

#include "hicode/reduction.h"

#include <algorithm>
#include <string>

#include "hicode/error.h"
#include "hicode/random.h"

namespace hicode {

std::string_view ReductionMethodName(ReductionMethod method) {
  switch (method) {
    case ReductionMethod::kRemoveEdge:
      return "remove";
    case ReductionMethod::kReduceEdge:
      return "reduce-edge";
    case ReductionMethod::kReduceWeight:
      return "reduce-weight";
  }
  return "unknown";
}

ReductionMethod ParseReductionMethod(std::string_view name) {
  if (name == "remove") return ReductionMethod::kRemoveEdge;
  if (name == "reduce-edge") return ReductionMethod::kReduceEdge;
  if (name == "reduce-weight") return ReductionMethod::kReduceWeight;
  throw Error(ErrorCode::kConfigError,
              "unknown reduction '" + std::string(name) + "'");
}

std::vector<CommunityDensities> ComputeDensities(const Graph& graph,
                                                 const Layer& layer) {
  const std::vector<CommunityTally> tallies = CommunityTallies(graph, layer);
  const double n = graph.num_nodes();
  const double total = graph.total_weight();
  std::vector<CommunityDensities> out(tallies.size());
  for (size_t c = 0; c < tallies.size(); ++c) {
    const CommunityTally& t = tallies[c];
    CommunityDensities& d = out[c];
    if (t.nodes < 2 || t.intra_weight <= 0.0) continue;
    const double nc = static_cast<double>(t.nodes);
    d.intra_density = t.intra_weight / (0.5 * nc * (nc - 1.0));
    const double background_pairs = 0.5 * (n * (n - 1.0) - nc * (nc - 1.0));
    if (background_pairs <= 0.0) {
      d.background_density = 0.0;
      d.ratio = 0.0;
      d.applies = true;
      continue;
    }
    d.background_density =
        std::max(0.0, total - t.intra_weight) / background_pairs;
    if (d.intra_density > d.background_density) {
      d.ratio = std::clamp(d.background_density / d.intra_density, 0.0, 1.0);
      d.applies = true;
    }
  }
  return out;
}

Graph RemoveEdgeReduce(const Graph& graph, const Layer& layer) {
  CheckLayerMatches(graph, layer);
  std::vector<double> weights;
  weights.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    weights.push_back(layer.community_of(e.u) == layer.community_of(e.v)
                          ? 0.0
                          : e.weight);
  }
  return graph.WithEdgeWeights(weights);
}

Graph ReduceEdgeReduce(const Graph& graph, const Layer& layer, uint64_t seed) {
  CheckLayerMatches(graph, layer);
  if (!graph.IsUniformlyWeighted()) {
    throw Error(ErrorCode::kHeterogeneousWeights,
                "reduce-edge needs a graph whose edges all share one weight");
  }
  const std::vector<CommunityDensities> densities =
      ComputeDensities(graph, layer);
  // Edges are visited in canonical order, so each community's stream is
  // consumed in a fixed order too.
  std::vector<std::optional<Rng>> streams(densities.size());
  std::vector<double> weights;
  weights.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    const CommunityId c = layer.community_of(e.u);
    if (c != layer.community_of(e.v) || !densities[c].applies) {
      weights.push_back(e.weight);
      continue;
    }
    if (!streams[c]) {
      streams[c].emplace(SplitSeed(seed, SeedStage::kCommunity,
                                   {static_cast<uint64_t>(c)}));
    }
    weights.push_back(streams[c]->Bernoulli(densities[c].ratio) ? e.weight
                                                                : 0.0);
  }
  return graph.WithEdgeWeights(weights);
}

Graph ReduceWeightReduce(const Graph& graph, const Layer& layer) {
  const std::vector<CommunityDensities> densities =
      ComputeDensities(graph, layer);
  std::vector<double> weights;
  weights.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    const CommunityId c = layer.community_of(e.u);
    if (c == layer.community_of(e.v) && densities[c].applies) {
      weights.push_back(e.weight * densities[c].ratio);
    } else {
      weights.push_back(e.weight);
    }
  }
  return graph.WithEdgeWeights(weights);
}

Graph Reduce(const Graph& graph, const Layer& layer, const ReductionSpec& spec) {
  switch (spec.method) {
    case ReductionMethod::kRemoveEdge:
      return RemoveEdgeReduce(graph, layer);
    case ReductionMethod::kReduceEdge:
      return ReduceEdgeReduce(graph, layer, spec.seed);
    case ReductionMethod::kReduceWeight:
      return ReduceWeightReduce(graph, layer);
  }
  throw Error(ErrorCode::kConfigError, "unknown reduction method");
}

}  // namespace hicode
