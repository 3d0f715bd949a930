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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapbc/isa.hpp"
#include "lapbc/layout.hpp"
#include "lapbc/routing.hpp"

namespace lapbc {

struct ScheduleParams {
  int d = 15;                // code distance, cycles per lattice surgery
  int m = 27;                // cycles per distillation round
  int distill_patches = 4;   // D
  bool hold_distill = false; // keep all D cells for the whole instruction

  /// Throws std::invalid_argument unless d is odd and >= 3, m >= 1, D >= 1.
  void validate() const;
};

/// Scheduled length of a LAPBC instruction.
Cycle duration(const IsaInstruction& instr, const ScheduleParams& params);

enum class MicroKind : std::uint8_t { IdleData, DataInOp, Vacant, LatticeSurgery, YMeasure, Distill };

const char* micro_kind_name(MicroKind kind);
MicroKind parse_micro_kind(std::string_view name);

struct Microinstruction {
  Cell patch;
  Cycle start = 0;
  Cycle end = 0;
  MicroKind kind = MicroKind::Vacant;
  std::optional<std::size_t> group;  // instruction id; absent for IdleData / Vacant

  friend bool operator==(const Microinstruction&, const Microinstruction&) = default;
};

struct ScheduledInstruction {
  std::size_t id = 0;
  IsaInstruction instruction;
  Cycle start = 0;
  Cycle duration = 0;
  std::vector<Cell> patches;          // every patch the instruction touches
  std::vector<Cell> distill_patches;  // empty unless EighthRot
};

class Schedule {
 public:
  Schedule(Layout layout, std::vector<ScheduledInstruction> records, std::vector<Microinstruction> busy);

  const Layout& layout() const { return layout_; }
  const std::vector<ScheduledInstruction>& instructions() const { return records_; }
  /// Non-idle microinstructions ordered by (start, group, kind, patch).
  const std::vector<Microinstruction>& busy() const { return busy_; }
  Cycle makespan() const { return makespan_; }

  /// Full timeline of one patch from 0 to the makespan, gaps filled with
  /// IdleData (data patches) or Vacant (routing patches).
  std::vector<Microinstruction> timeline(Cell patch) const;

 private:
  Layout layout_;
  std::vector<ScheduledInstruction> records_;
  std::vector<Microinstruction> busy_;
  std::vector<std::vector<std::size_t>> by_patch_;
  Cycle makespan_ = 0;
};

/// Greedy in-order list scheduling. Each instruction starts at the earliest
/// cycle, not before its support qubits are done, at which routing and
/// distillation allocation succeed against everything already committed.
Schedule schedule(const IsaProgram& program, const Layout& layout, const Mapping& mapping,
                  const ScheduleParams& params);

/// Throws std::logic_error on a patch overlap, a per-qubit ordering
/// violation or a makespan below the per-qubit lower bound.
void validate_schedule(const Schedule& sched, const ScheduleParams& params);

/// CSV with header patch_row,patch_col,start,end,kind,instruction_id
/// covering every patch timeline, gaps included.
std::string schedule_csv(const Schedule& sched);

/// Reads the busy microinstructions back from schedule_csv output;
/// IdleData and Vacant rows are skipped.
std::vector<Microinstruction> parse_schedule_csv(std::string_view text);

/// Grid of the patches at `cycle`: instruction id for busy patches, 'D' for
/// idle data, '.' for vacant routing.
std::string snapshot(const Schedule& sched, Cycle cycle);

}  // namespace lapbc
