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

#include "hicode/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hicode/error.h"

namespace hicode {

NodeId LabelMap::Intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), size());
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<NodeId> LabelMap::Find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

LabelMap LabelMap::Identity(NodeId n) {
  LabelMap map;
  for (NodeId u = 0; u < n; ++u) map.Intern(std::to_string(u));
  return map;
}

namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<double> ParseDouble(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

LabeledGraph ParseEdgeList(std::istream& in) {
  LabeledGraph out;
  std::vector<Edge> edges;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw Error(ErrorCode::kParseError,
                  where + ": expected 'u v [w]', got " +
                      std::to_string(tokens.size()) + " fields");
    }
    double weight = 1.0;
    if (tokens.size() == 3) {
      std::optional<double> w = ParseDouble(tokens[2]);
      if (!w) {
        throw Error(ErrorCode::kParseError,
                    where + ": weight '" + std::string(tokens[2]) +
                        "' is not a number");
      }
      if (!std::isfinite(*w) || *w < 0.0) {
        throw Error(ErrorCode::kInvalidWeight,
                    where + ": weight " + std::string(tokens[2]));
      }
      weight = *w;
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorCode::kSelfLoop,
                  where + ": self-loop on '" + std::string(tokens[0]) + "'");
    }
    const NodeId u = out.labels.Intern(tokens[0]);
    const NodeId v = out.labels.Intern(tokens[1]);
    edges.push_back({u, v, weight});
  }
  out.graph = Graph::FromEdges(edges, out.labels.size());
  return out;
}

LabeledGraph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void WriteEdgeList(std::ostream& out, const Graph& graph,
                   const LabelMap& labels) {
  const bool weighted =
      std::any_of(graph.edges().begin(), graph.edges().end(),
                  [](const Edge& e) { return e.weight != 1.0; });
  for (const Edge& e : graph.edges()) {
    out << labels.Label(e.u) << ' ' << labels.Label(e.v);
    if (weighted) out << ' ' << FormatDouble(e.weight);
    out << '\n';
  }
}

std::vector<LabelCommunity> ReadCommunityFile(std::istream& in) {
  std::vector<LabelCommunity> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    LabelCommunity community;
    std::set<std::string_view> seen;
    for (std::string_view t : tokens) {
      if (seen.insert(t).second) community.emplace_back(t);
    }
    out.push_back(std::move(community));
  }
  return out;
}

void WriteCommunityFile(std::ostream& out,
                        std::span<const LabelCommunity> communities) {
  for (const LabelCommunity& c : communities) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out << ' ';
      out << c[i];
    }
    out << '\n';
  }
}

std::vector<Community> ResolveCommunities(
    std::span<const LabelCommunity> communities, const LabelMap& labels) {
  std::vector<Community> out;
  out.reserve(communities.size());
  for (const LabelCommunity& c : communities) {
    Community ids;
    ids.reserve(c.size());
    for (const std::string& label : c) {
      std::optional<NodeId> id = labels.Find(label);
      if (!id) {
        throw Error(ErrorCode::kUnknownLabel,
                    "label '" + label + "' is not a node of the graph");
      }
      ids.push_back(*id);
    }
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<Community> InternCommunities(
    std::span<const LabelCommunity> communities, LabelMap& labels) {
  std::vector<Community> out;
  out.reserve(communities.size());
  for (const LabelCommunity& c : communities) {
    Community ids;
    for (const std::string& label : c) ids.push_back(labels.Intern(label));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<LabelCommunity> LabelLayer(const Layer& layer,
                                       const LabelMap& labels) {
  std::vector<LabelCommunity> out;
  for (const Community& c : layer.Communities()) {
    LabelCommunity named;
    named.reserve(c.size());
    for (NodeId u : c) named.push_back(labels.Label(u));
    out.push_back(std::move(named));
  }
  return out;
}

std::map<std::string, std::string> ParseKeyValueConfig(std::istream& in) {
  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return std::string_view();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  std::map<std::string, std::string> out;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "config line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    out[std::string(trim(view.substr(0, eq)))] =
        std::string(trim(view.substr(eq + 1)));
  }
  return out;
}

}  // namespace hicode
