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

#include "hicode/manifest.h"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "hicode/error.h"
#include "hicode/io.h"
#include "hicode/metrics.h"

namespace hicode {
namespace {

constexpr std::string_view kHeader = "section,num_layers,sweep,layer,key,value";

std::string Quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::optional<int> ParseOptionalInt(const std::string& s, int64_t line_no) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError, "manifest line " +
                                            std::to_string(line_no) +
                                            ": bad integer '" + s + "'");
  }
  return value;
}

std::string OptionalInt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

void RunManifest::Add(std::string section, std::string key, std::string value,
                      std::optional<int> num_layers, std::optional<int> sweep,
                      std::optional<int> layer) {
  rows_.push_back({std::move(section), num_layers, sweep, layer,
                   std::move(key), std::move(value)});
}

std::vector<ManifestRow> RunManifest::Section(std::string_view section) const {
  std::vector<ManifestRow> out;
  for (const ManifestRow& row : rows_) {
    if (row.section == section) out.push_back(row);
  }
  return out;
}

std::optional<std::string> RunManifest::Value(std::string_view section,
                                              std::string_view key) const {
  for (const ManifestRow& row : rows_) {
    if (row.section == section && row.key == key) return row.value;
  }
  return std::nullopt;
}

void RunManifest::Write(std::ostream& out) const {
  out << kHeader << '\n';
  for (const ManifestRow& row : rows_) {
    out << Quote(row.section) << ',' << OptionalInt(row.num_layers) << ','
        << OptionalInt(row.sweep) << ',' << OptionalInt(row.layer) << ','
        << Quote(row.key) << ',' << Quote(row.value) << '\n';
  }
}

RunManifest RunManifest::Read(std::istream& in) {
  RunManifest manifest;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kHeader) {
        throw Error(ErrorCode::kParseError, "manifest header mismatch");
      }
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 6) {
      throw Error(ErrorCode::kParseError,
                  "manifest line " + std::to_string(line_no) + ": expected 6 "
                  "fields, got " + std::to_string(f.size()));
    }
    manifest.Add(f[0], f[4], f[5], ParseOptionalInt(f[1], line_no),
                 ParseOptionalInt(f[2], line_no),
                 ParseOptionalInt(f[3], line_no));
  }
  if (line_no == 0) throw Error(ErrorCode::kParseError, "empty manifest");
  return manifest;
}

RunManifest BuildManifest(const ManifestInputs& inputs) {
  const PipelineConfig& config = *inputs.config;
  const LayerStack& stack = *inputs.stack;
  RunManifest m;

  m.Add("config", "input", inputs.input_name);
  m.Add("config", "nodes", std::to_string(inputs.graph->num_nodes()));
  m.Add("config", "edges", std::to_string(inputs.graph->num_edges()));
  m.Add("config", "total_weight", FormatDouble(inputs.graph->total_weight()));
  m.Add("config", "mode", inputs.cascade ? "cascade" : "hicode");
  m.Add("config", "base", config.detector);
  m.Add("config", "reduction",
        std::string(ReductionMethodName(inputs.cascade
                                            ? ReductionMethod::kRemoveEdge
                                            : config.reduction)));
  m.Add("config", "max_layers", std::to_string(config.max_layers));
  m.Add("config", "fixed_layers", config.fixed_layers
                                      ? std::to_string(*config.fixed_layers)
                                      : std::string());
  m.Add("config", "refine_iters", std::to_string(config.refine_iters));
  m.Add("config", "probe_iters", std::to_string(config.probe_iters));
  m.Add("config", "seed", std::to_string(config.seed));

  if (stack.selection) {
    const LayerSelection& sel = *stack.selection;
    for (const SelectionRecord& r : sel.records) {
      const int i = r.num_layers;
      m.Add("selection", "original_initial", FormatDouble(r.original_initial), i);
      m.Add("selection", "reduced_initial", FormatDouble(r.reduced_initial), i);
      m.Add("selection", "original_probe", FormatDouble(r.original_probe), i);
      m.Add("selection", "reduced_probe", FormatDouble(r.reduced_probe), i);
      m.Add("selection", "delta", FormatDouble(r.delta), i);
      m.Add("selection", "delta_reduced", FormatDouble(r.delta_reduced), i);
      m.Add("selection", "degenerate", r.degenerate ? "1" : "0", i);
    }
    m.Add("selection", "selected", std::to_string(sel.num_layers));
    m.Add("selection", "trigger", std::string(StopTriggerName(sel.trigger)));
    m.Add("selection", "truncated", sel.truncated ? "1" : "0");
  }

  const std::vector<std::vector<double>> truth_nmi =
      NmiTrace(stack, inputs.truth);
  for (size_t t = 0; t < stack.trace.size(); ++t) {
    const SweepRecord& rec = stack.trace[t];
    const int s = rec.sweep;
    m.Add("trace", "mean_original", FormatDouble(rec.mean_original),
          std::nullopt, s);
    m.Add("trace", "mean_reduced", FormatDouble(rec.mean_reduced),
          std::nullopt, s);
    for (size_t i = 0; i < rec.layers.size(); ++i) {
      const int layer = static_cast<int>(i) + 1;
      m.Add("trace", "original_modularity",
            FormatDouble(rec.original_modularity[i]), std::nullopt, s, layer);
      m.Add("trace", "reduced_modularity",
            FormatDouble(rec.reduced_modularity[i]), std::nullopt, s, layer);
      m.Add("trace", "num_communities",
            std::to_string(rec.layers[i].num_communities()), std::nullopt, s,
            layer);
      if (t > 0) {
        m.Add("trace", "nmi_previous",
              FormatDouble(Nmi(rec.layers[i], stack.trace[t - 1].layers[i])),
              std::nullopt, s, layer);
      }
      if (i < truth_nmi[t].size()) {
        m.Add("trace", "nmi_truth", FormatDouble(truth_nmi[t][i]),
              std::nullopt, s, layer);
      }
    }
  }

  m.Add("final", "num_layers", std::to_string(stack.layers.size()));
  m.Add("final", "selected_sweep", std::to_string(stack.selected_sweep));
  for (size_t i = 0; i < stack.layers.size(); ++i) {
    const int layer = static_cast<int>(i) + 1;
    m.Add("final", "original_modularity",
          FormatDouble(stack.original_modularity[i]), std::nullopt,
          std::nullopt, layer);
    m.Add("final", "reduced_modularity",
          FormatDouble(stack.reduced_modularity[i]), std::nullopt,
          std::nullopt, layer);
    m.Add("final", "num_communities",
          std::to_string(stack.layers[i].num_communities()), std::nullopt,
          std::nullopt, layer);
    if (i < inputs.layer_files.size()) {
      m.Add("final", "file", inputs.layer_files[i], std::nullopt,
            std::nullopt, layer);
    }
  }
  return m;
}

void WriteTraceCsv(std::ostream& out, const RunManifest& manifest) {
  struct Cells {
    std::string original, reduced, communities, nmi_previous, nmi_truth;
  };
  std::map<std::pair<int, int>, Cells> table;
  for (const ManifestRow& row : manifest.Section("trace")) {
    if (!row.sweep || !row.layer) continue;
    Cells& c = table[{*row.sweep, *row.layer}];
    if (row.key == "original_modularity") c.original = row.value;
    if (row.key == "reduced_modularity") c.reduced = row.value;
    if (row.key == "num_communities") c.communities = row.value;
    if (row.key == "nmi_previous") c.nmi_previous = row.value;
    if (row.key == "nmi_truth") c.nmi_truth = row.value;
  }
  out << "sweep,layer,original_modularity,reduced_modularity,num_communities,"
         "nmi_previous,nmi_truth\n";
  for (const auto& [key, c] : table) {
    out << key.first << ',' << key.second << ',' << c.original << ','
        << c.reduced << ',' << c.communities << ',' << c.nmi_previous << ','
        << c.nmi_truth << '\n';
  }
}

void WriteSelectionCsv(std::ostream& out, const RunManifest& manifest) {
  static constexpr std::string_view kColumns[] = {
      "original_initial", "reduced_initial", "original_probe", "reduced_probe",
      "delta",            "delta_reduced",   "degenerate"};
  std::map<int, std::map<std::string, std::string>> table;
  for (const ManifestRow& row : manifest.Section("selection")) {
    if (row.num_layers) table[*row.num_layers][row.key] = row.value;
  }
  out << "num_layers";
  for (std::string_view c : kColumns) out << ',' << c;
  out << '\n';
  for (const auto& [i, values] : table) {
    out << i;
    for (std::string_view c : kColumns) {
      auto it = values.find(std::string(c));
      out << ',' << (it == values.end() ? std::string() : it->second);
    }
    out << '\n';
  }
}

}  // namespace hicode
