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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lapbc/random.hpp"
#include "lapbc/scheduler.hpp"

namespace lapbc {

struct RuntimeParams {
  double p_success = 0.25;
  std::uint64_t seed = 0;
  int trials = 1;

  /// Throws std::invalid_argument unless 0 < p_success <= 1 and trials >= 1.
  void validate() const;
};

/// Rounds until one of D parallel distillations succeeds: the minimum of D
/// independent Geometric(p) draws on {1, 2, ...}.
int sample_distill_rounds(double p, int patches, Rng& rng);

struct RealizedInterval {
  Cycle start = 0;
  Cycle end = 0;
};

struct RuntimeResult {
  Cycle total_cycles = 0;
  /// Indexed by instruction id; instructions without microinstructions
  /// (zero-length measurements) are left at {0, 0}.
  std::vector<RealizedInterval> realized;
  std::size_t delayed_distills = 0;
  Cycle added_cycles = 0;
};

/// A schedule prepared for repeated stochastic execution. Built from the
/// busy microinstructions alone, so a schedule read back from CSV works.
class RuntimeModel {
 public:
  RuntimeModel(std::span<const Microinstruction> busy, int m);
  explicit RuntimeModel(const Schedule& sched, const ScheduleParams& params);

  /// Instruction ids owning a distillation phase, ascending.
  const std::vector<std::size_t>& distill_groups() const { return distill_groups_; }
  Cycle makespan() const { return makespan_; }

  /// One execution with explicit round counts, one per distill group.
  RuntimeResult run(std::span<const int> rounds) const;
  /// One execution with rounds drawn from `rng` in distill-group order.
  RuntimeResult run(double p_success, int patches, Rng& rng) const;

 private:
  struct Phase {
    MicroKind kind;
    std::size_t group;
    Cycle start;
    Cycle length;
    std::vector<std::size_t> cells;     // dense patch indices
    std::vector<std::size_t> waits_on;  // patches whose history gates the start
    std::vector<std::size_t> held;      // patches kept busy until the group ends
  };

  std::vector<Phase> phases_;
  std::vector<std::size_t> distill_groups_;
  std::vector<std::size_t> group_phase_count_;
  std::size_t patch_count_ = 0;
  std::size_t group_count_ = 0;
  int m_ = 0;
  Cycle makespan_ = 0;
};

RuntimeResult simulate(const Schedule& sched, const ScheduleParams& params, const RuntimeParams& rt,
                       std::uint64_t trial = 0);

/// rt.trials runs with seeds sub_seed(rt.seed, k).
std::vector<RuntimeResult> simulate_trials(const RuntimeModel& model, const ScheduleParams& params,
                                           const RuntimeParams& rt);

struct Summary {
  double mean = 0;
  double stddev = 0;  // sample standard deviation, 0 for a single value
  Cycle min = 0;
  Cycle max = 0;
};

/// Throws std::invalid_argument on an empty list.
Summary summarize(std::span<const RuntimeResult> results);

/// CSV with header trial,total_cycles,delayed_distills,added_cycles.
std::string results_csv(std::span<const RuntimeResult> results);

}  // namespace lapbc
