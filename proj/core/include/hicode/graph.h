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

#ifndef HICODE_GRAPH_H_
#define HICODE_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace hicode {

using NodeId = int32_t;

// Weights at or below this are treated as absent edges after reduction.
inline constexpr double kZeroWeightEpsilon = 1e-12;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;
};

// Immutable weighted undirected simple graph on nodes 0..num_nodes()-1.
//
// Edges are stored once in canonical form (u < v) sorted lexicographically;
// the index of an edge in edges() is stable for the lifetime of the graph and
// is shared by every graph derived through WithEdgeWeights(). Adjacency is a
// CSR array holding both directions.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an arbitrary edge sequence. Duplicate unordered pairs
  // are merged by summing their weights and zero-weight edges are dropped.
  // The node count is max(max endpoint + 1, min_num_nodes).
  //
  // Throws Error(kSelfLoop) for u == v, Error(kInvalidWeight) for negative or
  // non-finite weights and Error(kInvalidParam) for negative node ids.
  static Graph FromEdges(std::span<const Edge> edges, NodeId min_num_nodes = 0);

  NodeId num_nodes() const { return num_nodes_; }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }
  double total_weight() const { return total_weight_; }
  bool empty() const { return num_nodes_ == 0; }

  std::span<const Edge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u],
            adjacency_.data() + offsets_[u + 1]};
  }
  double weighted_degree(NodeId u) const { return degrees_[u]; }

  // True when every present edge carries the same weight (vacuously true for
  // edgeless graphs).
  bool IsUniformlyWeighted() const;

  // Same node set and edge order, new weights (indexed like edges()). Edges
  // whose new weight is <= kZeroWeightEpsilon are removed.
  Graph WithEdgeWeights(std::span<const double> weights) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes_ == b.num_nodes_ && a.edges_ == b.edges_;
  }

 private:
  // `edges` must already be canonical, sorted and free of duplicates.
  static Graph FromCanonical(std::vector<Edge> edges, NodeId num_nodes);

  NodeId num_nodes_ = 0;
  double total_weight_ = 0.0;
  std::vector<Edge> edges_;
  std::vector<int64_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
};

}  // namespace hicode

#endif  // HICODE_GRAPH_H_
