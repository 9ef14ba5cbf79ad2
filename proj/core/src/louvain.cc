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

#include <algorithm>
#include <numeric>
#include <string>

#include "hicode/detectors.h"
#include "hicode/error.h"
#include "hicode/random.h"

namespace hicode {
namespace {

constexpr double kMinModularityGain = 1e-9;

// Working graph for one Louvain level. Unlike Graph it carries a self-loop
// weight per node, which holds the internal weight of an aggregated
// community.
struct LevelGraph {
  int32_t n = 0;
  std::vector<int64_t> offsets;
  std::vector<int32_t> targets;
  std::vector<double> weights;
  std::vector<double> self_weight;
  std::vector<double> degree;  // includes 2 * self_weight
  double total_weight = 0.0;   // half the degree sum
};

LevelGraph FromGraph(const Graph& g) {
  LevelGraph lg;
  lg.n = g.num_nodes();
  lg.offsets.assign(lg.n + 1, 0);
  lg.self_weight.assign(lg.n, 0.0);
  lg.degree.assign(lg.n, 0.0);
  for (NodeId u = 0; u < lg.n; ++u) {
    lg.offsets[u + 1] = lg.offsets[u] + g.neighbors(u).size();
    for (const Neighbor& nb : g.neighbors(u)) {
      lg.targets.push_back(nb.node);
      lg.weights.push_back(nb.weight);
    }
    lg.degree[u] = g.weighted_degree(u);
  }
  lg.total_weight = g.total_weight();
  return lg;
}

// Collapses each community of `membership` (dense ids 0..k-1) into a node.
LevelGraph Aggregate(const LevelGraph& lg, const std::vector<int32_t>& membership,
                     int32_t k) {
  struct Arc {
    int32_t a, b;
    double w;
  };
  LevelGraph out;
  out.n = k;
  out.self_weight.assign(k, 0.0);
  out.degree.assign(k, 0.0);
  std::vector<Arc> arcs;
  for (int32_t u = 0; u < lg.n; ++u) {
    const int32_t cu = membership[u];
    out.self_weight[cu] += lg.self_weight[u];
    for (int64_t i = lg.offsets[u]; i < lg.offsets[u + 1]; ++i) {
      const int32_t v = lg.targets[i];
      if (v < u) continue;
      const int32_t cv = membership[v];
      if (cu == cv) {
        out.self_weight[cu] += lg.weights[i];
      } else {
        arcs.push_back({cu, cv, lg.weights[i]});
        arcs.push_back({cv, cu, lg.weights[i]});
      }
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  out.offsets.assign(k + 1, 0);
  for (size_t i = 0; i < arcs.size();) {
    size_t j = i;
    double w = 0.0;
    while (j < arcs.size() && arcs[j].a == arcs[i].a && arcs[j].b == arcs[i].b) {
      w += arcs[j].w;
      ++j;
    }
    out.targets.push_back(arcs[i].b);
    out.weights.push_back(w);
    ++out.offsets[arcs[i].a + 1];
    i = j;
  }
  for (int32_t c = 0; c < k; ++c) out.offsets[c + 1] += out.offsets[c];
  for (int32_t c = 0; c < k; ++c) {
    double d = 2.0 * out.self_weight[c];
    for (int64_t i = out.offsets[c]; i < out.offsets[c + 1]; ++i) {
      d += out.weights[i];
    }
    out.degree[c] = d;
  }
  out.total_weight = lg.total_weight;
  return out;
}

// Local-move phase. Returns the dense community of every node and whether any
// node left its singleton.
std::pair<std::vector<int32_t>, int32_t> LocalMoves(const LevelGraph& lg,
                                                    Rng& rng) {
  std::vector<int32_t> community(lg.n);
  std::iota(community.begin(), community.end(), 0);
  std::vector<double> tot(lg.degree);
  std::vector<double> link(lg.n, 0.0);
  std::vector<int32_t> touched;
  std::vector<int32_t> order(lg.n);
  std::iota(order.begin(), order.end(), 0);
  const double two_w = 2.0 * lg.total_weight;

  bool moved = true;
  while (moved) {
    moved = false;
    rng.Shuffle(std::span<int32_t>(order));
    for (int32_t u : order) {
      const double k_u = lg.degree[u];
      const int32_t current = community[u];
      touched.clear();
      for (int64_t i = lg.offsets[u]; i < lg.offsets[u + 1]; ++i) {
        const int32_t c = community[lg.targets[i]];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += lg.weights[i];
      }
      tot[current] -= k_u;
      // Gain of inserting u into c, in units of total_weight * dQ.
      auto gain = [&](int32_t c) { return link[c] - tot[c] * k_u / two_w; };
      int32_t best = current;
      double best_gain = gain(current);
      const double stay_gain = best_gain;
      for (int32_t c : touched) {
        if (c == current) continue;
        const double g = gain(c);
        if (g > best_gain) {
          best = c;
          best_gain = g;
        }
      }
      if (best != current &&
          (best_gain - stay_gain) / lg.total_weight > kMinModularityGain) {
        community[u] = best;
        moved = true;
      } else {
        best = current;
      }
      tot[best] += k_u;
      for (int32_t c : touched) link[c] = 0.0;
    }
  }

  std::vector<int32_t> dense(lg.n, -1);
  int32_t k = 0;
  for (int32_t u = 0; u < lg.n; ++u) {
    if (dense[community[u]] < 0) dense[community[u]] = k++;
    community[u] = dense[community[u]];
  }
  return {std::move(community), k};
}

}  // namespace

Layer LouvainDetect(const Graph& g, uint64_t seed) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "louvain on empty graph");
  std::vector<int32_t> membership(g.num_nodes());
  std::iota(membership.begin(), membership.end(), 0);
  if (g.total_weight() <= 0.0) return Layer(membership);

  Rng rng(seed);
  LevelGraph level = FromGraph(g);
  while (true) {
    auto [community, k] = LocalMoves(level, rng);
    if (k == level.n) break;
    for (int32_t& m : membership) m = community[m];
    level = Aggregate(level, community, k);
  }
  return Layer(membership);
}

std::unique_ptr<Detector> MakeDetector(std::string_view name) {
  if (name == "louvain") return std::make_unique<LouvainDetector>();
  if (name == "labelprop") return std::make_unique<LabelPropagationDetector>();
  throw Error(ErrorCode::kConfigError,
              "unknown detector '" + std::string(name) + "'");
}

std::vector<std::string_view> DetectorNames() { return {"louvain", "labelprop"}; }

}  // namespace hicode
