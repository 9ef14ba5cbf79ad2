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

#ifndef HICODE_IO_H_
#define HICODE_IO_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hicode/graph.h"
#include "hicode/layer.h"

namespace hicode {

// Bijection between external node labels and dense node ids. Ids are handed
// out in first-appearance order.
class LabelMap {
 public:
  NodeId Intern(std::string_view label);
  std::optional<NodeId> Find(std::string_view label) const;
  const std::string& Label(NodeId id) const { return labels_[id]; }
  NodeId size() const { return static_cast<NodeId>(labels_.size()); }

  // Labels "0".."n-1" for graphs that were built from dense ids.
  static LabelMap Identity(NodeId n);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

struct LabeledGraph {
  Graph graph;
  LabelMap labels;
};

// Reads "u v [w]" lines. '#' starts a comment; blank lines are skipped.
// Throws Error(kParseError) for malformed lines and Error(kSelfLoop) /
// Error(kInvalidWeight) for bad edges, each message naming the line number.
LabeledGraph ParseEdgeList(std::istream& in);
LabeledGraph ParseEdgeList(std::string_view text);

// One edge per line in canonical order. The weight column is written only
// when some edge weight differs from 1. Isolated nodes are not representable.
void WriteEdgeList(std::ostream& out, const Graph& graph,
                   const LabelMap& labels);

using LabelCommunity = std::vector<std::string>;

// One community per line, labels separated by whitespace. Blank lines and
// '#' comments are skipped; repeated labels within a line collapse.
std::vector<LabelCommunity> ReadCommunityFile(std::istream& in);
void WriteCommunityFile(std::ostream& out,
                        std::span<const LabelCommunity> communities);

// Maps labels to ids; throws Error(kUnknownLabel) for labels missing from
// `labels`.
std::vector<Community> ResolveCommunities(
    std::span<const LabelCommunity> communities, const LabelMap& labels);
// Interns every label into `labels`.
std::vector<Community> InternCommunities(
    std::span<const LabelCommunity> communities, LabelMap& labels);

std::vector<LabelCommunity> LabelLayer(const Layer& layer,
                                       const LabelMap& labels);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

// Flat "key = value" configuration; '#' comments and blank lines ignored.
// Throws Error(kParseError) on lines without '='.
std::map<std::string, std::string> ParseKeyValueConfig(std::istream& in);

}  // namespace hicode

#endif  // HICODE_IO_H_
