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

#include "lapbc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lapbc/transpiler.hpp"

namespace lapbc {

std::string BenchmarkSpec::id() const {
  std::string dims = std::to_string(width) + "x" + std::to_string(height);
  if (kind == BenchmarkKind::Rcs) return "rcs-" + dims + "-L" + std::to_string(layers);
  return "ising-" + dims + "-S" + std::to_string(steps);
}

std::pair<int, int> RunConfig::grid() const { return data_grid.value_or(std::make_pair(bench.height, bench.width)); }

void RunConfig::validate() const {
  schedule.validate();
  runtime().validate();
  synthesis().validate();
  if (bench.width < 1 || bench.height < 1) throw std::invalid_argument("benchmark size must be positive");
  if (bench.kind == BenchmarkKind::Rcs && bench.layers < 0) throw std::invalid_argument("layers must be >= 0");
  if (bench.kind == BenchmarkKind::Ising && bench.steps < 1) throw std::invalid_argument("steps must be >= 1");
  auto [a, b] = grid();
  if (a < 1 || b < 1) throw std::invalid_argument("data grid must be positive");
  if (static_cast<long>(a) * b < bench.qubits())
    throw std::invalid_argument("data grid " + std::to_string(a) + "x" + std::to_string(b) + " cannot hold " +
                                std::to_string(bench.qubits()) + " qubits");
}

SynthesisParams RunConfig::synthesis() const { return {rho, length_stddev, sub_seed(seed, 1)}; }

RuntimeParams RunConfig::runtime() const { return {p_success, sub_seed(seed, 2), trials}; }

LayoutKind parse_layout_kind(std::string_view name) {
  if (name == "standard") return LayoutKind::Standard;
  if (name == "sparse") return LayoutKind::Sparse;
  throw std::invalid_argument("unknown layout '" + std::string(name) + "' (standard|sparse)");
}

std::pair<int, int> parse_dims(std::string_view text) {
  auto x = text.find('x');
  if (x == std::string_view::npos) throw std::invalid_argument("expected AxB, got '" + std::string(text) + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    std::string a(text.substr(0, x)), b(text.substr(x + 1));
    int ra = std::stoi(a, &used_a), rb = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("");
    return {ra, rb};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected AxB, got '" + std::string(text) + "'");
  }
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_value(std::string_view key, std::string_view value) {
  std::istringstream in{std::string(value)};
  T out{};
  in >> out;
  if (!in || !in.eof()) throw std::invalid_argument("bad value '" + std::string(value) + "' for " + std::string(key));
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("bad value '" + std::string(value) + "' for " + std::string(key));
}

}  // namespace

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  if (key == "d") c.schedule.d = parse_value<int>(key, value);
  else if (key == "m") c.schedule.m = parse_value<int>(key, value);
  else if (key == "D") c.schedule.distill_patches = parse_value<int>(key, value);
  else if (key == "hold-distill") c.schedule.hold_distill = parse_bool(key, value);
  else if (key == "p-success") c.p_success = parse_value<double>(key, value);
  else if (key == "rho") c.rho = parse_value<double>(key, value);
  else if (key == "length-stddev") c.length_stddev = parse_value<double>(key, value);
  else if (key == "seed") c.seed = parse_value<std::uint64_t>(key, value);
  else if (key == "trials") c.trials = parse_value<int>(key, value);
  else if (key == "layout") c.layout = parse_layout_kind(value);
  else if (key == "data-grid") c.data_grid = parse_dims(value);
  else if (key == "mapping") c.mapping_path = std::string(value);
  else if (key == "layers") c.bench.layers = parse_value<int>(key, value);
  else if (key == "steps") c.bench.steps = parse_value<int>(key, value);
  else if (key == "size") std::tie(c.bench.width, c.bench.height) = parse_dims(value);
  else if (key == "benchmark") {
    if (value == "rcs") c.bench.kind = BenchmarkKind::Rcs;
    else if (value == "ising") c.bench.kind = BenchmarkKind::Ising;
    else throw std::invalid_argument("unknown benchmark '" + std::string(value) + "' (rcs|ising)");
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    try {
      apply_setting(config, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

Circuit generate(const BenchmarkSpec& bench, std::uint64_t seed) {
  if (bench.kind == BenchmarkKind::Rcs) return gen_rcs(bench.width, bench.height, bench.layers, seed);
  return gen_ising(bench.width, bench.height, bench.steps);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

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

Pipeline build_pipeline(const RunConfig& config) {
  stage("config", [&] { config.validate(); });
  Circuit circuit = stage("generate", [&] { return generate(config.bench, config.seed); });
  Circuit synthesized = stage("synthesize", [&] { return synthesize(circuit, config.synthesis()); });
  std::int64_t spc_cycles =
      stage("transpile", [&] { return spc_cost(spc_transpile(synthesized), config.schedule.d); });
  IsaProgram lapbc = stage("transpile", [&] { return lapbc_transpile(synthesized); });
  auto [a, b] = config.grid();
  Layout layout = stage("layout", [&] { return make_layout(config.layout, a, b); });
  Mapping mapping = stage("layout", [&] {
    if (config.mapping_path) return parse_mapping(read_file(*config.mapping_path), layout);
    return default_mapping(layout, lapbc.qubit_count);
  });
  Schedule sched = stage("schedule", [&] {
    Schedule s = schedule(lapbc, layout, mapping, config.schedule);
    validate_schedule(s, config.schedule);
    return s;
  });
  return Pipeline{std::move(circuit), std::move(synthesized), std::move(lapbc), spc_cycles,
                  std::move(layout), std::move(mapping), std::move(sched)};
}

ComparisonRow compare_row(const RunConfig& config, const Pipeline& pipeline, double p_success) {
  return stage("simulate", [&] {
    RuntimeParams rt = config.runtime();
    rt.p_success = p_success;
    RuntimeModel model(pipeline.schedule, config.schedule);
    auto results = simulate_trials(model, config.schedule, rt);
    Summary s = summarize(results);
    ComparisonRow row;
    row.benchmark = config.bench.id();
    row.qubits = static_cast<int>(pipeline.lapbc.qubit_count);
    row.p_success = p_success;
    row.spc_cycles = pipeline.spc_cycles;
    row.lapbc_mean_cycles = s.mean;
    row.lapbc_stddev = s.stddev;
    row.parallelism = static_cast<double>(row.spc_cycles) / s.mean;
    row.reduction_percent = 100.0 * (1.0 - s.mean / static_cast<double>(row.spc_cycles));
    row.patches_spc = spc_patch_count(row.qubits);
    row.patches_lapbc = static_cast<int>(pipeline.layout.cell_count());
    return row;
  });
}

ComparisonRow run_compare(const RunConfig& config) {
  Pipeline p = build_pipeline(config);
  return compare_row(config, p, config.p_success);
}

std::vector<ComparisonRow> sweep_p_success(const RunConfig& config, std::span<const double> p_values) {
  Pipeline p = build_pipeline(config);
  std::vector<ComparisonRow> rows;
  for (double v : p_values) rows.push_back(compare_row(config, p, v));
  return rows;
}

std::string report_csv(std::vector<ComparisonRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.qubits < b.qubits; });
  std::ostringstream out;
  out << "benchmark,N,p_success,spc_cycles,lapbc_mean_cycles,lapbc_stddev,parallelism,reduction_percent,"
         "patches_spc,patches_lapbc\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%g,%lld,%.2f,%.2f,%.4f,%.2f,%d,%d\n", r.benchmark.c_str(), r.qubits,
                  r.p_success, static_cast<long long>(r.spc_cycles), r.lapbc_mean_cycles, r.lapbc_stddev,
                  r.parallelism, r.reduction_percent, r.patches_spc, r.patches_lapbc);
    out << buf;
  }
  return out.str();
}

void emit_report(const std::vector<ComparisonRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("no rows to report");
  write_file(path, report_csv(rows));
}

}  // namespace lapbc
