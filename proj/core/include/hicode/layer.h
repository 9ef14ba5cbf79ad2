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

#ifndef HICODE_LAYER_H_
#define HICODE_LAYER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "hicode/graph.h"

namespace hicode {

using CommunityId = int32_t;
using Community = std::vector<NodeId>;

// A partition of nodes 0..num_nodes()-1 into disjoint, non-empty communities.
//
// Community ids are compacted to 0..num_communities()-1 in order of first
// appearance when scanning nodes by id, so two layers describing the same
// partition compare equal regardless of the labels they were built from.
class Layer {
 public:
  Layer() = default;

  // `assignment[u]` is any non-negative label for node u. Throws
  // Error(kIncompleteLayer) if a label is negative.
  explicit Layer(std::span<const int64_t> assignment);
  explicit Layer(const std::vector<int32_t>& assignment);

  // Throws Error(kIncompleteLayer) unless `communities` covers every node in
  // 0..num_nodes-1 exactly once. Empty communities are ignored.
  static Layer FromCommunities(NodeId num_nodes,
                               std::span<const Community> communities);

  static Layer Singletons(NodeId num_nodes);
  static Layer Whole(NodeId num_nodes);

  NodeId num_nodes() const { return static_cast<NodeId>(assignment_.size()); }
  CommunityId num_communities() const { return num_communities_; }
  CommunityId community_of(NodeId u) const { return assignment_[u]; }
  std::span<const CommunityId> assignment() const { return assignment_; }

  // Members of each community, each sorted ascending.
  std::vector<Community> Communities() const;
  std::vector<int64_t> CommunitySizes() const;

  friend bool operator==(const Layer&, const Layer&) = default;

 private:
  std::vector<CommunityId> assignment_;
  CommunityId num_communities_ = 0;
};

struct CommunityTally {
  int64_t nodes = 0;          // n_C
  int64_t intra_edges = 0;    // e_C
  double intra_weight = 0.0;  // w_C
  double boundary_weight = 0.0;

  friend bool operator==(const CommunityTally&,
                         const CommunityTally&) = default;
};

// Per-community aggregates of `graph` under `layer`, indexed by community id.
// Throws Error(kIncompleteLayer) if the layer does not cover the graph's nodes.
std::vector<CommunityTally> CommunityTallies(const Graph& graph,
                                             const Layer& layer);

// Throws Error(kIncompleteLayer) if `layer` is not a partition of `graph`.
void CheckLayerMatches(const Graph& graph, const Layer& layer);

}  // namespace hicode

#endif  // HICODE_LAYER_H_
