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

#include "hicode/graph.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hicode/error.h"

namespace hicode {

Graph Graph::FromEdges(std::span<const Edge> edges, NodeId min_num_nodes) {
  NodeId num_nodes = std::max<NodeId>(min_num_nodes, 0);
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0) {
      throw Error(ErrorCode::kInvalidParam,
                  "negative node id in edge (" + std::to_string(e.u) + ", " +
                      std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop on node " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error(ErrorCode::kInvalidWeight,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") has weight " + std::to_string(e.weight));
    }
    num_nodes = std::max(num_nodes, std::max(e.u, e.v) + 1);
    canonical.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::stable_sort(canonical.begin(), canonical.end(),
                   [](const Edge& a, const Edge& b) {
                     return a.u != b.u ? a.u < b.u : a.v < b.v;
                   });
  std::vector<Edge> merged;
  merged.reserve(canonical.size());
  for (const Edge& e : canonical) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Edge& e) { return e.weight == 0.0; });
  return FromCanonical(std::move(merged), num_nodes);
}

Graph Graph::FromCanonical(std::vector<Edge> edges, NodeId num_nodes) {
  Graph g;
  g.num_nodes_ = num_nodes;
  g.edges_ = std::move(edges);
  g.offsets_.assign(static_cast<size_t>(num_nodes) + 1, 0);
  g.degrees_.assign(num_nodes, 0.0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    g.degrees_[e.u] += e.weight;
    g.degrees_[e.v] += e.weight;
    g.total_weight_ += e.weight;
  }
  for (NodeId u = 0; u < num_nodes; ++u) g.offsets_[u + 1] += g.offsets_[u];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical edges are sorted by (u, v), so each adjacency row comes out
  // sorted by neighbor id.
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
  return g;
}

bool Graph::IsUniformlyWeighted() const {
  if (edges_.empty()) return true;
  const double w = edges_.front().weight;
  return std::all_of(edges_.begin(), edges_.end(),
                     [w](const Edge& e) { return e.weight == w; });
}

Graph Graph::WithEdgeWeights(std::span<const double> weights) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (weights[i] > kZeroWeightEpsilon) {
      kept.push_back({edges_[i].u, edges_[i].v, weights[i]});
    }
  }
  return FromCanonical(std::move(kept), num_nodes_);
}

}  // namespace hicode
