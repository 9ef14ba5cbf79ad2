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

#include "hicode/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "hicode/error.h"

namespace hicode {

double Modularity(const Graph& graph, const Layer& layer) {
  const std::vector<CommunityTally> tallies = CommunityTallies(graph, layer);
  const double total = graph.total_weight();
  if (total <= 0.0) {
    throw Error(ErrorCode::kZeroWeightGraph,
                "modularity is undefined on a graph with no edge weight");
  }
  double q = 0.0;
  for (const CommunityTally& t : tallies) {
    const double a = (2.0 * t.intra_weight + t.boundary_weight) / (2.0 * total);
    q += t.intra_weight / total - a * a;
  }
  return q;
}

namespace {

double Entropy(std::span<const int64_t> sizes, double n) {
  double h = 0.0;
  for (int64_t s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double Nmi(const Layer& a, const Layer& b) {
  if (a.num_nodes() != b.num_nodes()) {
    throw Error(ErrorCode::kDomainMismatch,
                "partitions cover " + std::to_string(a.num_nodes()) + " and " +
                    std::to_string(b.num_nodes()) + " nodes");
  }
  const bool a_trivial = a.num_communities() <= 1;
  const bool b_trivial = b.num_communities() <= 1;
  if (a_trivial && b_trivial) return 1.0;
  if (a_trivial || b_trivial) return 0.0;

  const double n = a.num_nodes();
  std::unordered_map<int64_t, int64_t> joint;
  joint.reserve(static_cast<size_t>(std::min<int64_t>(
      a.num_nodes(),
      static_cast<int64_t>(a.num_communities()) * b.num_communities())));
  for (NodeId u = 0; u < a.num_nodes(); ++u) {
    const int64_t key =
        static_cast<int64_t>(a.community_of(u)) * b.num_communities() +
        b.community_of(u);
    ++joint[key];
  }
  const std::vector<int64_t> size_a = a.CommunitySizes();
  const std::vector<int64_t> size_b = b.CommunitySizes();
  // Sum in key order so the result does not depend on hash iteration order.
  std::vector<std::pair<int64_t, int64_t>> cells(joint.begin(), joint.end());
  std::sort(cells.begin(), cells.end());
  double mutual = 0.0;
  for (const auto& [key, count] : cells) {
    const int64_t ca = key / b.num_communities();
    const int64_t cb = key % b.num_communities();
    const double c = static_cast<double>(count);
    mutual += (c / n) * std::log(c * n / (static_cast<double>(size_a[ca]) *
                                          static_cast<double>(size_b[cb])));
  }
  const double denom = 0.5 * (Entropy(size_a, n) + Entropy(size_b, n));
  return std::clamp(mutual / denom, 0.0, 1.0);
}

namespace {

// Size-weighted mean best Jaccard of each community in `from` against the
// communities of `to`. Overlaps are counted through an inverted node index of
// `to`, so pairs sharing no node are never visited.
MetricReport BestMatchScore(std::string metric,
                            std::span<const Community> from,
                            std::span<const Community> to) {
  if (from.empty() || to.empty()) {
    throw Error(ErrorCode::kEmptyCommunitySet,
                metric + " needs non-empty detected and truth sets");
  }
  std::unordered_map<NodeId, std::vector<size_t>> index;
  for (size_t j = 0; j < to.size(); ++j) {
    for (NodeId u : to[j]) index[u].push_back(j);
  }
  MetricReport report{std::move(metric), 0.0, {}};
  report.matches.reserve(from.size());
  std::vector<int64_t> overlap(to.size(), 0);
  std::vector<size_t> touched;
  double weighted = 0.0;
  double weight = 0.0;
  for (const Community& c : from) {
    touched.clear();
    for (NodeId u : c) {
      auto it = index.find(u);
      if (it == index.end()) continue;
      for (size_t j : it->second) {
        if (overlap[j]++ == 0) touched.push_back(j);
      }
    }
    std::sort(touched.begin(), touched.end());
    CommunityMatch best;
    for (size_t j : touched) {
      const double inter = static_cast<double>(overlap[j]);
      const double uni =
          static_cast<double>(c.size() + to[j].size()) - inter;
      const double jac = inter / uni;
      if (jac > best.jaccard) best = {j, jac};
      overlap[j] = 0;
    }
    report.matches.push_back(best);
    weighted += static_cast<double>(c.size()) * best.jaccard;
    weight += static_cast<double>(c.size());
  }
  report.score = weight > 0.0 ? weighted / weight : 0.0;
  return report;
}

}  // namespace

MetricReport JcPrecision(std::span<const Community> detected,
                         std::span<const Community> truth) {
  return BestMatchScore("jcprecision", detected, truth);
}

MetricReport JcRecall(std::span<const Community> detected,
                      std::span<const Community> truth) {
  return BestMatchScore("jcrecall", truth, detected);
}

double HarmonicMean(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double JcF1(std::span<const Community> detected,
            std::span<const Community> truth) {
  return HarmonicMean(JcPrecision(detected, truth).score,
                      JcRecall(detected, truth).score);
}

std::vector<Community> FlattenLayers(std::span<const Layer> layers) {
  std::vector<Community> out;
  for (const Layer& layer : layers) {
    std::vector<Community> cs = layer.Communities();
    std::move(cs.begin(), cs.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace hicode
