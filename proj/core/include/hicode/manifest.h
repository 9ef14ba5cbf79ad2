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

#ifndef HICODE_MANIFEST_H_
#define HICODE_MANIFEST_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hicode/graph.h"
#include "hicode/layer.h"
#include "hicode/pipeline.h"

namespace hicode {

// One long-format manifest line:
//   section,num_layers,sweep,layer,key,value
// Integer columns are left empty when they do not apply.
struct ManifestRow {
  std::string section;
  std::optional<int> num_layers;
  std::optional<int> sweep;
  std::optional<int> layer;
  std::string key;
  std::string value;

  friend bool operator==(const ManifestRow&, const ManifestRow&) = default;
};

// Everything needed to audit and reproduce a detect run: the configuration,
// the layer-count selection table, the per-sweep trace and the final layers.
// Wall-clock timings are kept out of the manifest so that equal runs produce
// byte-identical files.
class RunManifest {
 public:
  void Add(std::string section, std::string key, std::string value,
           std::optional<int> num_layers = std::nullopt,
           std::optional<int> sweep = std::nullopt,
           std::optional<int> layer = std::nullopt);

  std::span<const ManifestRow> rows() const { return rows_; }
  std::vector<ManifestRow> Section(std::string_view section) const;
  std::optional<std::string> Value(std::string_view section,
                                   std::string_view key) const;

  void Write(std::ostream& out) const;
  // Throws Error(kParseError) on a malformed manifest.
  static RunManifest Read(std::istream& in);

 private:
  std::vector<ManifestRow> rows_;
};

struct ManifestInputs {
  const PipelineConfig* config = nullptr;
  bool cascade = false;
  std::string input_name;
  const Graph* graph = nullptr;
  const LayerStack* stack = nullptr;
  std::span<const Layer> truth;  // optional planted layers for NMI columns
  std::vector<std::string> layer_files;
};

RunManifest BuildManifest(const ManifestInputs& inputs);

// Wide per-(sweep, layer) table:
//   sweep,layer,original_modularity,reduced_modularity,num_communities,
//   nmi_previous,nmi_truth
void WriteTraceCsv(std::ostream& out, const RunManifest& manifest);
// num_layers,original_initial,reduced_initial,original_probe,reduced_probe,
// delta,delta_reduced,degenerate
void WriteSelectionCsv(std::ostream& out, const RunManifest& manifest);

}  // namespace hicode

#endif  // HICODE_MANIFEST_H_
