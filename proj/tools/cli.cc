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

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hicode/error.h"
#include "hicode/io.h"
#include "hicode/manifest.h"
#include "hicode/metrics.h"
#include "hicode/pipeline.h"
#include "hicode/synthgen.h"

namespace hicode::cli {
namespace {

namespace fs = std::filesystem;

// I/O failures that are not library errors.
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeFailure("cannot open '" + path + "' for reading");
  return in;
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw RuntimeFailure("cannot open '" + path.string() + "' for writing");
  }
  out << contents;
  if (!out) throw RuntimeFailure("write to '" + path.string() + "' failed");
}

template <typename Fn>
void WriteWith(const fs::path& path, Fn&& fn) {
  std::ostringstream buf;
  fn(buf);
  WriteFile(path, buf.str());
}

std::vector<LabelCommunity> ReadCommunities(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ReadCommunityFile(in);
}

// "100:0.16,50:0.08" -> two layer specs.
std::vector<LayerSpec> ParseLayerSpecs(const std::string& text) {
  std::vector<LayerSpec> specs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidParam,
                  "layer spec '" + item + "' is not communities:p");
    }
    try {
      specs.push_back({std::stoi(item.substr(0, colon)),
                       std::stod(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidParam,
                  "layer spec '" + item + "' is not communities:p");
    }
  }
  if (specs.empty()) throw Error(ErrorCode::kInvalidParam, "no layers given");
  return specs;
}

struct GenOptions {
  std::string preset;
  std::string layers;
  int nodes = 3000;
  uint64_t seed = 0;
  std::string out_dir;
};

int RunGen(const GenOptions& opt, std::ostream& out) {
  Preset preset;
  if (!opt.preset.empty()) {
    preset = PresetByName(opt.preset);
  } else {
    preset = {"custom", opt.nodes, ParseLayerSpecs(opt.layers)};
  }
  const SyntheticInstance inst =
      Generate(preset.num_nodes, preset.layers, opt.seed);
  const LabelMap labels = LabelMap::Identity(inst.graph.num_nodes());
  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);

  WriteWith(dir / "graph.txt",
            [&](std::ostream& o) { WriteEdgeList(o, inst.graph, labels); });
  for (size_t l = 0; l < inst.planted.size(); ++l) {
    WriteWith(dir / ("planted" + std::to_string(l + 1) + ".cmty"),
              [&](std::ostream& o) {
                WriteCommunityFile(o, LabelLayer(inst.planted[l], labels));
              });
  }
  WriteWith(dir / "params.csv", [&](std::ostream& o) {
    o << "key,value\n";
    o << "preset," << preset.name << '\n';
    o << "nodes," << preset.num_nodes << '\n';
    o << "seed," << opt.seed << '\n';
    for (size_t l = 0; l < preset.layers.size(); ++l) {
      o << "layer" << l + 1 << "_communities,"
        << preset.layers[l].num_communities << '\n';
      o << "layer" << l + 1 << "_intra_p,"
        << FormatDouble(preset.layers[l].intra_p) << '\n';
    }
    o << "expected_edges,"
      << FormatDouble(ExpectedEdgeCount(preset.num_nodes, preset.layers))
      << '\n';
    o << "edges," << inst.graph.num_edges() << '\n';
    for (size_t l = 0; l < inst.planted.size(); ++l) {
      o << "planted" << l + 1 << "_modularity,"
        << FormatDouble(inst.graph.total_weight() > 0.0
                            ? Modularity(inst.graph, inst.planted[l])
                            : 0.0)
        << '\n';
    }
  });
  out << "nodes," << inst.graph.num_nodes() << "\nedges,"
      << inst.graph.num_edges() << "\nlayers," << inst.planted.size() << '\n';
  return kExitOk;
}

struct DetectOptions {
  std::string input;
  std::string out_dir;
  std::string config_file;
  std::vector<std::string> truth;
  bool cascade = false;
  // Flag values; only those the user actually passed override the config
  // file and defaults.
  std::string base = "louvain";
  std::string reduction = "reduce-weight";
  int max_layers = 8;
  int fixed_layers = 0;
  int refine_iters = 30;
  int probe_iters = 5;
  uint64_t seed = 0;
};

int ParseIntValue(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::kConfigError,
              "config key '" + key + "' expects an integer, got '" + value +
                  "'");
}

void ApplyConfigFile(const std::string& path, PipelineConfig& config,
                     bool& cascade) {
  std::ifstream in = OpenInput(path);
  for (const auto& [key, value] : ParseKeyValueConfig(in)) {
    if (key == "base") {
      config.detector = value;
    } else if (key == "reduction") {
      config.reduction = ParseReductionMethod(value);
    } else if (key == "max_layers") {
      config.max_layers = ParseIntValue(key, value);
    } else if (key == "fixed_layers") {
      config.fixed_layers = ParseIntValue(key, value);
    } else if (key == "refine_iters") {
      config.refine_iters = ParseIntValue(key, value);
    } else if (key == "probe_iters") {
      config.probe_iters = ParseIntValue(key, value);
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kConfigError, "bad seed '" + value + "'");
      }
    } else if (key == "cascade") {
      cascade = value == "1" || value == "true";
    } else {
      throw Error(ErrorCode::kConfigError, "unknown config key '" + key + "'");
    }
  }
}

int RunDetect(const DetectOptions& opt, const CLI::App& cmd, std::ostream& out) {
  PipelineConfig config;
  bool cascade = false;
  if (!opt.config_file.empty()) ApplyConfigFile(opt.config_file, config, cascade);
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--base")) config.detector = opt.base;
  if (given("--reduction")) config.reduction = ParseReductionMethod(opt.reduction);
  if (given("--max-layers")) config.max_layers = opt.max_layers;
  if (given("--fixed-layers")) config.fixed_layers = opt.fixed_layers;
  if (given("--refine-iters")) config.refine_iters = opt.refine_iters;
  if (given("--probe-iters")) config.probe_iters = opt.probe_iters;
  if (given("--seed")) config.seed = opt.seed;
  if (given("--cascade")) cascade = opt.cascade;
  ValidateConfig(config);
  if (cascade && !config.fixed_layers) {
    throw Error(ErrorCode::kConfigError, "--cascade needs --fixed-layers");
  }

  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, double>> timings;
  auto timed = [&](const std::string& stage, auto&& fn) {
    const auto start = Clock::now();
    auto result = fn();
    timings.emplace_back(
        stage, std::chrono::duration<double>(Clock::now() - start).count());
    return result;
  };

  LabeledGraph input = timed("read_input", [&] {
    std::ifstream in = OpenInput(opt.input);
    return ParseEdgeList(in);
  });
  if (input.graph.empty()) throw Error(ErrorCode::kEmptyGraph, "input has no nodes");

  std::vector<Layer> truth;
  for (const std::string& path : opt.truth) {
    const std::vector<Community> cs =
        ResolveCommunities(ReadCommunities(path), input.labels);
    truth.push_back(Layer::FromCommunities(input.graph.num_nodes(), cs));
  }

  const LayerStack stack = timed("pipeline", [&] {
    return cascade ? RunCascade(input.graph, config)
                   : RunHicode(input.graph, config);
  });

  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  std::vector<std::string> files;
  for (size_t i = 0; i < stack.layers.size(); ++i) {
    files.push_back("layer" + std::to_string(i + 1) + ".cmty");
    WriteWith(dir / files.back(), [&](std::ostream& o) {
      WriteCommunityFile(o, LabelLayer(stack.layers[i], input.labels));
    });
  }
  ManifestInputs inputs;
  inputs.config = &config;
  inputs.cascade = cascade;
  inputs.input_name = fs::path(opt.input).filename().string();
  inputs.graph = &input.graph;
  inputs.stack = &stack;
  inputs.truth = truth;
  inputs.layer_files = files;
  const RunManifest manifest = BuildManifest(inputs);
  WriteWith(dir / "manifest.csv", [&](std::ostream& o) { manifest.Write(o); });
  WriteWith(dir / "labels.csv", [&](std::ostream& o) {
    o << "id,label\n";
    for (NodeId u = 0; u < input.labels.size(); ++u) {
      o << u << ',' << input.labels.Label(u) << '\n';
    }
  });
  WriteWith(dir / "timing.csv", [&](std::ostream& o) {
    o << "stage,seconds\n";
    for (const auto& [stage, seconds] : timings) {
      o << stage << ',' << FormatDouble(seconds) << '\n';
    }
  });
  out << "layers," << stack.layers.size() << '\n';
  for (size_t i = 0; i < stack.layers.size(); ++i) {
    out << files[i] << ',' << FormatDouble(stack.original_modularity[i]) << '\n';
  }
  return kExitOk;
}

struct EvalOptions {
  std::vector<std::string> detected;
  std::vector<std::string> truth;
  std::vector<std::string> metrics{"jcf1"};
  std::string graph;
};

// Builds a partition over `labels` from one community file. Nodes missing
// from the file trigger Error(kDomainMismatch).
Layer PartitionOver(const std::vector<Community>& communities, NodeId n,
                    const std::string& path) {
  std::vector<char> covered(n, 0);
  for (const Community& c : communities) {
    for (NodeId u : c) covered[u] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw Error(ErrorCode::kDomainMismatch,
                "'" + path + "' does not cover every node");
  }
  return Layer::FromCommunities(n, communities);
}

int RunEval(const EvalOptions& opt, std::ostream& out) {
  std::optional<LabeledGraph> graph;
  if (!opt.graph.empty()) {
    std::ifstream in = OpenInput(opt.graph);
    graph = ParseEdgeList(in);
  }
  LabelMap free_labels;
  auto load = [&](const std::vector<std::string>& paths) {
    std::vector<std::vector<Community>> per_file;
    for (const std::string& path : paths) {
      const std::vector<LabelCommunity> raw = ReadCommunities(path);
      per_file.push_back(graph ? ResolveCommunities(raw, graph->labels)
                               : InternCommunities(raw, free_labels));
    }
    return per_file;
  };
  const std::vector<std::vector<Community>> detected = load(opt.detected);
  const std::vector<std::vector<Community>> truth = load(opt.truth);
  auto flatten = [](const std::vector<std::vector<Community>>& files) {
    std::vector<Community> all;
    for (const auto& f : files) all.insert(all.end(), f.begin(), f.end());
    return all;
  };
  const std::vector<Community> detected_all = flatten(detected);
  const std::vector<Community> truth_all = flatten(truth);
  const NodeId n = graph ? graph->graph.num_nodes() : free_labels.size();

  out << "metric,value\n";
  for (const std::string& metric : opt.metrics) {
    double value = 0.0;
    if (metric == "jcprecision") {
      value = JcPrecision(detected_all, truth_all).score;
    } else if (metric == "jcrecall") {
      value = JcRecall(detected_all, truth_all).score;
    } else if (metric == "jcf1") {
      value = JcF1(detected_all, truth_all);
    } else if (metric == "nmi") {
      if (detected.size() != 1 || truth.size() != 1) {
        throw Error(ErrorCode::kConfigError,
                    "nmi compares exactly one detected and one truth file");
      }
      value = Nmi(PartitionOver(detected[0], n, opt.detected[0]),
                  PartitionOver(truth[0], n, opt.truth[0]));
    } else if (metric == "modularity") {
      if (!graph || detected.size() != 1) {
        throw Error(ErrorCode::kConfigError,
                    "modularity needs --graph and exactly one detected file");
      }
      value = Modularity(graph->graph,
                         PartitionOver(detected[0], n, opt.detected[0]));
    } else {
      throw Error(ErrorCode::kConfigError, "unknown metric '" + metric + "'");
    }
    out << metric << ',' << FormatDouble(value) << '\n';
  }
  return kExitOk;
}

struct TraceOptions {
  std::string manifest;
  std::string table = "trace";
  std::string out_dir;
};

int RunTrace(const TraceOptions& opt, std::ostream& out) {
  std::ifstream in = OpenInput(opt.manifest);
  const RunManifest manifest = RunManifest::Read(in);
  if (!opt.out_dir.empty()) {
    const fs::path dir(opt.out_dir);
    fs::create_directories(dir);
    WriteWith(dir / "trace.csv",
              [&](std::ostream& o) { WriteTraceCsv(o, manifest); });
    WriteWith(dir / "selection.csv",
              [&](std::ostream& o) { WriteSelectionCsv(o, manifest); });
    return kExitOk;
  }
  if (opt.table == "selection") {
    WriteSelectionCsv(out, manifest);
  } else {
    WriteTraceCsv(out, manifest);
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  return code == ErrorCode::kConfigError ? kExitUsage : kExitRuntimeError;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Hidden community detection toolkit", "hicode"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a layered blockmodel");
  auto* preset_opt = gen_cmd->add_option("--preset", gen.preset, "synl2 or synl3")
                         ->check(CLI::IsMember({"synl2", "synl3"}));
  auto* layers_opt =
      gen_cmd->add_option("--layers", gen.layers,
                          "Comma-separated communities:p pairs, e.g. 100:0.16,50:0.08");
  preset_opt->excludes(layers_opt);
  gen_cmd->add_option("--nodes", gen.nodes, "Node count for --layers")
      ->check(CLI::Range(2, 100000000));
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->required();

  DetectOptions det;
  CLI::App* det_cmd = app.add_subcommand("detect", "Run HICODE or Cascade");
  det_cmd->add_option("--input", det.input, "Edge list file")->required();
  det_cmd->add_option("--out-dir", det.out_dir, "Output directory")->required();
  det_cmd->add_option("--config", det.config_file, "key = value config file");
  det_cmd->add_option("--base", det.base, "Base detector")
      ->check(CLI::IsMember({"louvain", "labelprop"}));
  det_cmd->add_option("--reduction", det.reduction, "Reduction method")
      ->check(CLI::IsMember({"remove", "reduce-edge", "reduce-weight"}));
  det_cmd->add_option("--max-layers", det.max_layers, "Cap for layer selection");
  det_cmd->add_option("--fixed-layers", det.fixed_layers,
                      "Skip layer selection and use this many layers");
  det_cmd->add_option("--refine-iters", det.refine_iters, "Refinement sweeps");
  det_cmd->add_option("--probe-iters", det.probe_iters,
                      "Sweeps per candidate during layer selection");
  det_cmd->add_option("--seed", det.seed, "Master seed");
  det_cmd->add_flag("--cascade", det.cascade,
                    "Cascade baseline: remove-edge, no refinement");
  det_cmd->add_option("--truth", det.truth,
                      "Planted layer files (adds NMI columns to the trace)");

  EvalOptions ev;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Compare community files");
  eval_cmd->add_option("--detected", ev.detected, "Detected community files")
      ->required();
  eval_cmd->add_option("--truth", ev.truth, "Ground-truth community files")
      ->required();
  eval_cmd->add_option("--metric", ev.metrics, "Metrics to print")
      ->check(CLI::IsMember(
          {"jcf1", "jcprecision", "jcrecall", "nmi", "modularity"}));
  eval_cmd->add_option("--graph", ev.graph,
                       "Edge list; labels are checked against it");

  TraceOptions tr;
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "Re-emit CSV traces from a manifest");
  trace_cmd->add_option("--manifest", tr.manifest, "manifest.csv")->required();
  trace_cmd->add_option("--table", tr.table, "trace or selection")
      ->check(CLI::IsMember({"trace", "selection"}));
  trace_cmd->add_option("--out-dir", tr.out_dir,
                        "Write trace.csv and selection.csv here instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      if (gen.preset.empty() && gen.layers.empty()) {
        err << "gen: one of --preset or --layers is required\n";
        return kExitUsage;
      }
      return RunGen(gen, out);
    }
    if (*det_cmd) return RunDetect(det, *det_cmd, out);
    if (*eval_cmd) return RunEval(ev, out);
    if (*trace_cmd) return RunTrace(tr, out);
  } catch (const Error& e) {
    err << "hicode: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "hicode: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitUsage;
}

}  // namespace hicode::cli
