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

#include "hicode/layer.h"

#include <string>
#include <unordered_map>

#include "hicode/error.h"

namespace hicode {
namespace {

template <typename Label>
std::vector<CommunityId> Compact(std::span<const Label> labels,
                                 CommunityId& num_communities) {
  std::unordered_map<Label, CommunityId> remap;
  std::vector<CommunityId> out(labels.size());
  for (size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] < 0) {
      throw Error(ErrorCode::kIncompleteLayer,
                  "node " + std::to_string(u) + " has no community");
    }
    auto [it, inserted] =
        remap.try_emplace(labels[u], static_cast<CommunityId>(remap.size()));
    out[u] = it->second;
  }
  num_communities = static_cast<CommunityId>(remap.size());
  return out;
}

}  // namespace

Layer::Layer(std::span<const int64_t> assignment) {
  assignment_ = Compact(assignment, num_communities_);
}

Layer::Layer(const std::vector<int32_t>& assignment) {
  assignment_ = Compact(std::span<const int32_t>(assignment), num_communities_);
}

Layer Layer::FromCommunities(NodeId num_nodes,
                             std::span<const Community> communities) {
  std::vector<int32_t> labels(num_nodes, -1);
  for (size_t c = 0; c < communities.size(); ++c) {
    for (NodeId u : communities[c]) {
      if (u < 0 || u >= num_nodes) {
        throw Error(ErrorCode::kIncompleteLayer,
                    "node " + std::to_string(u) + " is outside 0.." +
                        std::to_string(num_nodes - 1));
      }
      if (labels[u] != -1) {
        throw Error(ErrorCode::kIncompleteLayer,
                    "node " + std::to_string(u) +
                        " appears in more than one community");
      }
      labels[u] = static_cast<int32_t>(c);
    }
  }
  return Layer(labels);
}

Layer Layer::Singletons(NodeId num_nodes) {
  std::vector<int32_t> labels(num_nodes);
  for (NodeId u = 0; u < num_nodes; ++u) labels[u] = u;
  return Layer(labels);
}

Layer Layer::Whole(NodeId num_nodes) {
  return Layer(std::vector<int32_t>(num_nodes, 0));
}

std::vector<Community> Layer::Communities() const {
  std::vector<Community> out(num_communities_);
  for (NodeId u = 0; u < num_nodes(); ++u) out[assignment_[u]].push_back(u);
  return out;
}

std::vector<int64_t> Layer::CommunitySizes() const {
  std::vector<int64_t> sizes(num_communities_, 0);
  for (CommunityId c : assignment_) ++sizes[c];
  return sizes;
}

void CheckLayerMatches(const Graph& graph, const Layer& layer) {
  if (layer.num_nodes() != graph.num_nodes()) {
    throw Error(ErrorCode::kIncompleteLayer,
                "layer covers " + std::to_string(layer.num_nodes()) +
                    " nodes but the graph has " +
                    std::to_string(graph.num_nodes()));
  }
}

std::vector<CommunityTally> CommunityTallies(const Graph& graph,
                                             const Layer& layer) {
  CheckLayerMatches(graph, layer);
  std::vector<CommunityTally> tallies(layer.num_communities());
  for (CommunityId c : layer.assignment()) ++tallies[c].nodes;
  for (const Edge& e : graph.edges()) {
    const CommunityId cu = layer.community_of(e.u);
    const CommunityId cv = layer.community_of(e.v);
    if (cu == cv) {
      ++tallies[cu].intra_edges;
      tallies[cu].intra_weight += e.weight;
    } else {
      tallies[cu].boundary_weight += e.weight;
      tallies[cv].boundary_weight += e.weight;
    }
  }
  return tallies;
}

}  // namespace hicode
