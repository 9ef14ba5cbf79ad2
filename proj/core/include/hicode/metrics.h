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

#ifndef HICODE_METRICS_H_
#define HICODE_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hicode/graph.h"
#include "hicode/layer.h"

namespace hicode {

// Newman modularity on weighted graphs:
//   Q = sum_C [ w_C / W - ((2 w_C + boundary_C) / (2 W))^2 ]
// where W is the total edge weight. Throws Error(kZeroWeightGraph) if W == 0
// and Error(kIncompleteLayer) if the layer does not match the graph.
double Modularity(const Graph& graph, const Layer& layer);

// Normalized mutual information with arithmetic-mean normalization,
// I(A;B) / ((H(A) + H(B)) / 2), natural log. If both partitions are a single
// community the result is 1; if exactly one is, 0. Throws
// Error(kDomainMismatch) when the node counts differ.
double Nmi(const Layer& a, const Layer& b);

struct CommunityMatch {
  size_t best = 0;       // index into the compared-against set
  double jaccard = 0.0;  // 0 when the community overlaps nothing
};

struct MetricReport {
  std::string metric;
  double score = 0.0;
  // For jcprecision/jcrecall: best match of each community of the scanned
  // side, in input order.
  std::vector<CommunityMatch> matches;
};

// Size-weighted mean over detected communities of their best Jaccard
// similarity against any truth community. Throws Error(kEmptyCommunitySet)
// if either side is empty.
MetricReport JcPrecision(std::span<const Community> detected,
                         std::span<const Community> truth);

// As JcPrecision with the roles of the two sets swapped.
MetricReport JcRecall(std::span<const Community> detected,
                      std::span<const Community> truth);

// Harmonic mean of JcPrecision and JcRecall; 0 when both are 0.
double JcF1(std::span<const Community> detected,
            std::span<const Community> truth);
double HarmonicMean(double precision, double recall);

// Concatenates the communities of every layer into one flat set.
std::vector<Community> FlattenLayers(std::span<const Layer> layers);

}  // namespace hicode

#endif  // HICODE_METRICS_H_
