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

#include <numeric>

#include "hicode/detectors.h"
#include "hicode/error.h"
#include "hicode/random.h"

namespace hicode {

Layer LabelPropagationDetect(const Graph& g, uint64_t seed) {
  if (g.empty()) {
    throw Error(ErrorCode::kEmptyGraph, "label propagation on empty graph");
  }
  const NodeId n = g.num_nodes();
  Rng rng(seed);
  std::vector<int32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<int32_t> next(n);
  std::vector<int32_t> count(n, 0);
  std::vector<int32_t> touched;
  std::vector<int32_t> tied;

  for (int round = 0; round < kLabelPropagationMaxRounds; ++round) {
    // Settled: every node already holds the unique majority of its closed
    // neighborhood. A round in which random tie-breaks merely happen to keep
    // the old labels does not count.
    bool settled = true;
    for (NodeId u = 0; u < n; ++u) {
      touched.clear();
      auto vote = [&](int32_t label) {
        if (count[label]++ == 0) touched.push_back(label);
      };
      vote(labels[u]);
      for (const Neighbor& nb : g.neighbors(u)) vote(labels[nb.node]);

      int32_t top = 0;
      for (int32_t label : touched) top = std::max(top, count[label]);
      tied.clear();
      for (int32_t label : touched) {
        if (count[label] == top) tied.push_back(label);
      }
      next[u] = tied.size() == 1 ? tied.front() : tied[rng.UniformInt(tied.size())];
      settled &= tied.size() == 1 && next[u] == labels[u];
      for (int32_t label : touched) count[label] = 0;
    }
    labels.swap(next);
    if (settled) break;
  }
  return Layer(labels);
}

}  // namespace hicode
