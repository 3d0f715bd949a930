// Copyright 2026 The lapbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lapbc/circuit.hpp"
#include "lapbc/isa.hpp"
#include "lapbc/layout.hpp"
#include "lapbc/report.hpp"
#include "lapbc/runtime.hpp"
#include "lapbc/scheduler.hpp"
#include "lapbc/synthesis.hpp"
#include "lapbc/transpiler.hpp"

namespace {

using namespace lapbc;

// Settings shared by the pipeline subcommands. Values stay strings so a
// config file and the command line go through the same parser.
struct Settings {
  std::optional<std::string> config_path;
  std::map<std::string, std::optional<std::string>> values;
  bool hold_distill = false;

  void add(CLI::App* app, const std::vector<std::string>& keys) {
    for (const auto& key : keys) {
      if (key == "hold-distill") {
        app->add_flag("--hold-distill", hold_distill, "Keep every distillation patch busy for the whole rotation");
        continue;
      }
      app->add_option("--" + key, values[key], help(key));
    }
  }

  RunConfig resolve() const {
    RunConfig c;
    if (config_path) apply_config_text(c, read_file(*config_path));
    for (const auto& [key, value] : values) {
      if (value) apply_setting(c, key, *value);
    }
    if (hold_distill) c.schedule.hold_distill = true;
    return c;
  }

  static std::string help(const std::string& key) {
    static const std::map<std::string, std::string> text = {
        {"d", "Code distance (odd, >= 3)"},
        {"m", "Cycles per distillation round"},
        {"D", "Distillation patches per eighth rotation"},
        {"p-success", "Distillation success probability"},
        {"rho", "Synthesis precision"},
        {"length-stddev", "Standard deviation of the synthesized sequence length"},
        {"seed", "Random seed"},
        {"trials", "Runtime simulation trials"},
        {"layout", "standard or sparse"},
        {"data-grid", "Logical data grid AxB (rows x cols)"},
        {"mapping", "Qubit mapping file"},
        {"layers", "RCS layers"},
        {"steps", "Ising Trotter steps"},
        {"size", "Benchmark qubit grid WxH"},
        {"benchmark", "rcs or ising"},
    };
    return text.at(key);
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::pair<int, int> default_grid(std::size_t n) {
  int a = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
  int b = std::max(1, static_cast<int>((n + a - 1) / a));
  return {a, b};
}

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locality-aware Pauli-based computation compiler and runtime simulator"};
  app.require_subcommand(1);

  std::string in = "-";
  std::string out = "-";

  auto* gen_rcs_cmd = app.add_subcommand("gen-rcs", "Generate a random circuit sampling benchmark");
  Settings gen_rcs_s;
  gen_rcs_s.add(gen_rcs_cmd, {"size", "layers", "seed"});
  gen_rcs_cmd->add_option("--out", out, "Output IR file");

  auto* gen_ising_cmd = app.add_subcommand("gen-ising", "Generate a 2D transverse-field Ising Trotter circuit");
  Settings gen_ising_s;
  gen_ising_s.add(gen_ising_cmd, {"size", "steps"});
  gen_ising_cmd->add_option("--out", out, "Output IR file");

  auto* synth_cmd = app.add_subcommand("synth", "Replace arbitrary-angle rotations by synthesized sequences");
  Settings synth_s;
  synth_s.add(synth_cmd, {"rho", "length-stddev", "seed"});
  synth_cmd->add_option("--in", in, "Input IR file");
  synth_cmd->add_option("--out", out, "Output IR file");

  auto* transpile_cmd = app.add_subcommand("transpile", "Translate IR to the SPC or LAPBC instruction set");
  std::string isa = "lapbc";
  int cost_d = 15;
  transpile_cmd->add_option("--isa", isa, "spc or lapbc")->check(CLI::IsMember({"spc", "lapbc"}));
  transpile_cmd->add_option("--d", cost_d, "Code distance for the SPC cost report");
  transpile_cmd->add_option("--in", in, "Input IR file");
  transpile_cmd->add_option("--out", out, "Output ISA file");

  auto* schedule_cmd = app.add_subcommand("schedule", "Schedule a LAPBC program onto a patch layout");
  Settings schedule_s;
  schedule_s.add(schedule_cmd, {"d", "m", "D", "hold-distill", "layout", "data-grid", "mapping"});
  std::optional<Cycle> snapshot_cycle;
  schedule_cmd->add_option("--in", in, "Input ISA file");
  schedule_cmd->add_option("--out", out, "Output schedule CSV");
  schedule_cmd->add_option("--snapshot", snapshot_cycle, "Print the patch grid at this cycle");

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate distillation delays on a schedule CSV");
  Settings simulate_s;
  simulate_s.add(simulate_cmd, {"m", "D", "p-success", "seed", "trials"});
  simulate_cmd->add_option("--in", in, "Input schedule CSV");
  simulate_cmd->add_option("--out", out, "Output results CSV");

  auto* compare_cmd = app.add_subcommand("compare", "Run the full pipeline and compare SPC with LAPBC");
  Settings compare_s;
  const std::vector<std::string> all_keys = {"benchmark", "size", "layers", "steps", "d", "m", "D", "hold-distill",
                                             "p-success", "rho", "length-stddev", "seed", "trials", "layout",
                                             "data-grid", "mapping"};
  compare_s.add(compare_cmd, all_keys);
  compare_cmd->add_option("--config", compare_s.config_path, "Flat key = value config file");
  compare_cmd->add_option("--out", out, "Output report CSV");

  auto* sweep_cmd = app.add_subcommand("sweep", "Re-simulate one schedule over several p_success values");
  Settings sweep_s;
  sweep_s.add(sweep_cmd, all_keys);
  std::vector<double> p_values = {0.1, 0.25, 0.4, 0.7, 0.9};
  sweep_cmd->add_option("--config", sweep_s.config_path, "Flat key = value config file");
  sweep_cmd->add_option("--p-values", p_values, "p_success values")->delimiter(',');
  sweep_cmd->add_option("--out", out, "Output report CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_rcs_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return gen_rcs_s.resolve(); });
      Circuit circuit = stage("generate", [&] { return gen_rcs(c.bench.width, c.bench.height, c.bench.layers, c.seed); });
      stage("write", [&] { write_output(out, serialize_ir(circuit)); });
    } else if (gen_ising_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return gen_ising_s.resolve(); });
      Circuit circuit = stage("generate", [&] { return gen_ising(c.bench.width, c.bench.height, c.bench.steps); });
      stage("write", [&] { write_output(out, serialize_ir(circuit)); });
    } else if (synth_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return synth_s.resolve(); });
      Circuit circuit = stage("parse", [&] { return parse_ir(read_input(in)); });
      SynthesisParams params{c.rho, c.length_stddev, c.seed};
      Circuit synthesized = stage("synthesize", [&] { return synthesize(circuit, params); });
      stage("write", [&] { write_output(out, serialize_ir(synthesized)); });
    } else if (transpile_cmd->parsed()) {
      Circuit circuit = stage("parse", [&] { return parse_ir(read_input(in)); });
      IsaProgram program = stage("transpile", [&] { return isa == "spc" ? spc_transpile(circuit) : lapbc_transpile(circuit); });
      stage("write", [&] { write_output(out, serialize_isa(program)); });
      std::cerr << "instructions: " << program.instructions.size() << '\n';
      if (program.flavor == IsaFlavor::Spc) std::cerr << "spc cycles: " << spc_cost(program, cost_d) << '\n';
    } else if (schedule_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return schedule_s.resolve(); });
      IsaProgram program = stage("parse", [&] { return parse_isa(read_input(in)); });
      auto [a, b] = c.data_grid.value_or(default_grid(program.qubit_count));
      Layout layout = stage("layout", [&] { return make_layout(c.layout, a, b); });
      Mapping mapping = stage("layout", [&] {
        if (c.mapping_path) return parse_mapping(read_file(*c.mapping_path), layout);
        return default_mapping(layout, program.qubit_count);
      });
      Schedule sched = stage("schedule", [&] {
        Schedule s = schedule(program, layout, mapping, c.schedule);
        validate_schedule(s, c.schedule);
        return s;
      });
      stage("write", [&] { write_output(out, schedule_csv(sched)); });
      if (snapshot_cycle) std::cerr << snapshot(sched, *snapshot_cycle);
      std::cerr << "makespan: " << sched.makespan() << '\n';
    } else if (simulate_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return simulate_s.resolve(); });
      auto busy = stage("parse", [&] { return parse_schedule_csv(read_input(in)); });
      auto results = stage("simulate", [&] {
        RuntimeModel model(busy, c.schedule.m);
        RuntimeParams rt{c.p_success, c.seed, c.trials};
        return simulate_trials(model, c.schedule, rt);
      });
      stage("write", [&] { write_output(out, results_csv(results)); });
      Summary s = summarize(results);
      std::cerr << "mean " << s.mean << " stddev " << s.stddev << " min " << s.min << " max " << s.max << '\n';
    } else if (compare_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return compare_s.resolve(); });
      ComparisonRow row = run_compare(c);
      stage("write", [&] { write_output(out, report_csv({row})); });
    } else if (sweep_cmd->parsed()) {
      RunConfig c = stage("config", [&] { return sweep_s.resolve(); });
      auto rows = sweep_p_success(c, p_values);
      stage("write", [&] { write_output(out, report_csv(rows)); });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
