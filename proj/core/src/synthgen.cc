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

#include "hicode/synthgen.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hicode/error.h"
#include "hicode/random.h"

namespace hicode {

SyntheticInstance Generate(NodeId n, std::span<const LayerSpec> specs,
                           uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidParam, "generator needs at least 2 nodes");
  }
  for (const LayerSpec& spec : specs) {
    if (!(spec.intra_p >= 0.0 && spec.intra_p <= 1.0)) {
      throw Error(ErrorCode::kInvalidParam,
                  "intra_p " + std::to_string(spec.intra_p) +
                      " is not a probability");
    }
    if (spec.num_communities < 1 || spec.num_communities > n) {
      throw Error(ErrorCode::kInvalidParam,
                  "num_communities " + std::to_string(spec.num_communities) +
                      " outside 1.." + std::to_string(n));
    }
  }

  SyntheticInstance instance;
  instance.specs.assign(specs.begin(), specs.end());
  instance.seed = seed;
  std::vector<Edge> edges;
  for (size_t l = 0; l < specs.size(); ++l) {
    Rng rng(SplitSeed(seed, SeedStage::kGenerator, {l}));
    std::vector<int32_t> assignment(n);
    for (NodeId u = 0; u < n; ++u) {
      assignment[u] = static_cast<int32_t>(rng.UniformInt(specs[l].num_communities));
    }
    std::vector<Community> members(specs[l].num_communities);
    for (NodeId u = 0; u < n; ++u) members[assignment[u]].push_back(u);
    for (const Community& c : members) {
      for (size_t i = 0; i < c.size(); ++i) {
        for (size_t j = i + 1; j < c.size(); ++j) {
          if (rng.Bernoulli(specs[l].intra_p)) edges.push_back({c[i], c[j], 1.0});
        }
      }
    }
    instance.planted.emplace_back(assignment);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              edges.end());
  instance.graph = Graph::FromEdges(edges, n);
  return instance;
}

double ExpectedEdgeCount(NodeId n, std::span<const LayerSpec> specs) {
  double miss = 1.0;
  for (const LayerSpec& spec : specs) {
    miss *= 1.0 - spec.intra_p / static_cast<double>(spec.num_communities);
  }
  const double pairs = 0.5 * static_cast<double>(n) * (n - 1.0);
  return pairs * (1.0 - miss);
}

Preset SynL2Preset() { return {"synl2", 3000, {{100, 0.16}, {50, 0.08}}}; }

Preset SynL3Preset() {
  return {"synl3", 3000, {{100, 0.16}, {50, 0.08}, {30, 0.048}}};
}

Preset PresetByName(std::string_view name) {
  if (name == "synl2") return SynL2Preset();
  if (name == "synl3") return SynL3Preset();
  throw Error(ErrorCode::kInvalidParam,
              "unknown preset '" + std::string(name) + "'");
}

}  // namespace hicode
