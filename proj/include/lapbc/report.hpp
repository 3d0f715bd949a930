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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapbc/circuit.hpp"
#include "lapbc/isa.hpp"
#include "lapbc/layout.hpp"
#include "lapbc/runtime.hpp"
#include "lapbc/scheduler.hpp"
#include "lapbc/synthesis.hpp"

namespace lapbc {

enum class BenchmarkKind : std::uint8_t { Rcs, Ising };

struct BenchmarkSpec {
  BenchmarkKind kind = BenchmarkKind::Rcs;
  int width = 6;
  int height = 6;
  int layers = 500;  // RCS
  int steps = 1;     // Ising fourth-order Trotter steps

  int qubits() const { return width * height; }
  /// e.g. "rcs-6x6-L500", "ising-6x6-S1".
  std::string id() const;
};

struct RunConfig {
  ScheduleParams schedule;
  double p_success = 0.25;
  double rho = 1e-7;
  double length_stddev = 2.0;
  std::uint64_t seed = 1;
  int trials = 10;
  LayoutKind layout = LayoutKind::Standard;
  std::optional<std::pair<int, int>> data_grid;  // rows x cols, default height x width
  std::optional<std::string> mapping_path;
  BenchmarkSpec bench;

  void validate() const;
  std::pair<int, int> grid() const;
  SynthesisParams synthesis() const;
  RuntimeParams runtime() const;
};

/// Applies one `key = value` setting; keys are the CLI flag names without
/// dashes prefix (d, m, p-success, D, rho, seed, trials, layout, data-grid,
/// mapping, layers, steps, benchmark, size, hold-distill, length-stddev).
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat `key = value` lines with '#' comments. Throws ParseError.
void apply_config_text(RunConfig& config, std::string_view text);

LayoutKind parse_layout_kind(std::string_view name);
std::pair<int, int> parse_dims(std::string_view text);  // "AxB"

/// Error raised by a pipeline stage, labelled with the stage name.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

Circuit generate(const BenchmarkSpec& bench, std::uint64_t seed);

struct Pipeline {
  Circuit circuit;
  Circuit synthesized;
  IsaProgram lapbc;
  std::int64_t spc_cycles = 0;
  Layout layout;
  Mapping mapping;
  Schedule schedule;
};

/// generate -> synthesize -> transpile (both flavors) -> layout -> schedule,
/// with the schedule validity checks asserted.
Pipeline build_pipeline(const RunConfig& config);

struct ComparisonRow {
  std::string benchmark;
  int qubits = 0;
  double p_success = 0;
  std::int64_t spc_cycles = 0;
  double lapbc_mean_cycles = 0;
  double lapbc_stddev = 0;
  double parallelism = 0;
  double reduction_percent = 0;
  int patches_spc = 0;
  int patches_lapbc = 0;
};

/// Row for an already built pipeline at one p_success.
ComparisonRow compare_row(const RunConfig& config, const Pipeline& pipeline, double p_success);
ComparisonRow run_compare(const RunConfig& config);
/// One schedule, re-simulated for every p.
std::vector<ComparisonRow> sweep_p_success(const RunConfig& config, std::span<const double> p_values);

/// Fixed header, rows sorted by qubit count (stable).
std::string report_csv(std::vector<ComparisonRow> rows);
void emit_report(const std::vector<ComparisonRow>& rows, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lapbc
