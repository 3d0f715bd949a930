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

#include "lapbc/scheduler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace lapbc {

void ScheduleParams::validate() const {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("code distance d must be odd and >= 3");
  if (m < 1) throw std::invalid_argument("distillation time m must be >= 1");
  if (distill_patches < 1) throw std::invalid_argument("distillation patch count D must be >= 1");
}

Cycle duration(const IsaInstruction& instr, const ScheduleParams& params) {
  const Cycle d = params.d;
  switch (instr.op) {
    case IsaOp::InitZero:
      return d;
    case IsaOp::MeasureSingle:
      return instr.axis.terms().front().second == Axis::Y ? (d + 3) / 2 : 0;
    case IsaOp::MeasureMulti:
      return d;
    case IsaOp::QuarterRot:
      return (3 * d + 3) / 2;
    case IsaOp::EighthRot:
      return params.m + (3 * d + 3) / 2;
  }
  throw std::logic_error("unknown instruction");
}

const char* micro_kind_name(MicroKind kind) {
  switch (kind) {
    case MicroKind::IdleData: return "IdleData";
    case MicroKind::DataInOp: return "DataInOp";
    case MicroKind::Vacant: return "Vacant";
    case MicroKind::LatticeSurgery: return "LatticeSurgery";
    case MicroKind::YMeasure: return "YMeasure";
    case MicroKind::Distill: return "Distill";
  }
  return "?";
}

MicroKind parse_micro_kind(std::string_view name) {
  for (auto k : {MicroKind::IdleData, MicroKind::DataInOp, MicroKind::Vacant, MicroKind::LatticeSurgery,
                 MicroKind::YMeasure, MicroKind::Distill}) {
    if (name == micro_kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown microinstruction kind '" + std::string(name) + "'");
}

namespace {

int phase_rank(MicroKind k) {
  switch (k) {
    case MicroKind::Distill: return 0;
    case MicroKind::DataInOp: return 1;
    case MicroKind::LatticeSurgery: return 2;
    case MicroKind::YMeasure: return 3;
    default: return 4;
  }
}

auto busy_key(const Microinstruction& u) {
  return std::make_tuple(u.start, u.group.value_or(0), phase_rank(u.kind), u.patch);
}

}  // namespace

Schedule::Schedule(Layout layout, std::vector<ScheduledInstruction> records, std::vector<Microinstruction> busy)
    : layout_(std::move(layout)), records_(std::move(records)), busy_(std::move(busy)) {
  std::sort(busy_.begin(), busy_.end(), [](const auto& a, const auto& b) { return busy_key(a) < busy_key(b); });
  by_patch_.resize(layout_.cell_count());
  for (std::size_t i = 0; i < busy_.size(); ++i) {
    by_patch_.at(layout_.index(busy_[i].patch)).push_back(i);
    makespan_ = std::max(makespan_, busy_[i].end);
  }
  for (const auto& r : records_) makespan_ = std::max(makespan_, r.start + r.duration);
}

std::vector<Microinstruction> Schedule::timeline(Cell patch) const {
  std::vector<Microinstruction> own;
  for (std::size_t i : by_patch_.at(layout_.index(patch))) own.push_back(busy_[i]);
  std::sort(own.begin(), own.end(), [](const auto& a, const auto& b) { return a.start < b.start; });
  MicroKind gap = layout_.is_data(patch) ? MicroKind::IdleData : MicroKind::Vacant;
  std::vector<Microinstruction> out;
  Cycle t = 0;
  for (const auto& u : own) {
    if (u.start > t) out.push_back({patch, t, u.start, gap, std::nullopt});
    out.push_back(u);
    t = std::max(t, u.end);
  }
  if (makespan_ > t) out.push_back({patch, t, makespan_, gap, std::nullopt});
  return out;
}

namespace {

struct Attempt {
  std::vector<Microinstruction> micros;
  std::vector<Cell> distill;
};

// Outcome of one placement try at a fixed cycle. `retry_at` is the first
// later cycle at which the outcome could differ.
struct TryResult {
  std::optional<Attempt> placed;
  std::optional<Cycle> retry_at;
};

std::optional<Cycle> earliest(std::initializer_list<const FreeMask*> masks) {
  std::optional<Cycle> out;
  for (const auto* m : masks) {
    if (m->next_change && (!out || *m->next_change < *out)) out = m->next_change;
  }
  return out;
}

class Scheduler {
 public:
  Scheduler(const Layout& layout, const ScheduleParams& params) : layout_(layout), params_(params), occ_(layout.cell_count()) {}

  TryResult try_place(std::size_t id, const IsaInstruction& inst, const std::vector<Terminal>& terms, Cycle c) {
    const Cycle d = params_.d;
    const Cycle dur = duration(inst, params_);
    Attempt a;
    auto add = [&](Cell cell, MicroKind kind, Cycle s, Cycle e) {
      if (s < e) a.micros.push_back({cell, s, e, kind, id});
    };
    switch (inst.op) {
      case IsaOp::InitZero:
        add(terms[0].cell, MicroKind::DataInOp, c, c + dur);
        return {std::move(a), std::nullopt};
      case IsaOp::MeasureSingle:
        add(terms[0].cell, MicroKind::YMeasure, c, c + dur);
        return {std::move(a), std::nullopt};
      case IsaOp::MeasureMulti: {
        FreeMask ls = free_routing_cells(layout_, occ_, c, 0, d);
        auto region = route_surgery(layout_, ls, terms);
        if (!region) return {std::nullopt, ls.next_change};
        for (const auto& t : terms) add(t.cell, MicroKind::DataInOp, c, c + dur);
        for (Cell r : *region) add(r, MicroKind::LatticeSurgery, c, c + d);
        return {std::move(a), std::nullopt};
      }
      case IsaOp::QuarterRot: {
        FreeMask ls = free_routing_cells(layout_, occ_, c, 0, d);
        FreeMask anc = free_routing_cells(layout_, occ_, c, 0, dur);
        auto region = route_surgery(layout_, ls, terms);
        if (!region) return {std::nullopt, ls.next_change};
        auto ancilla = pick_ancilla(*region, terms, anc);
        if (!ancilla) return {std::nullopt, step(earliest({&ls, &anc}), c)};
        for (const auto& t : terms) add(t.cell, MicroKind::DataInOp, c, c + dur);
        std::vector<Cell> surgery = *region;
        if (!std::binary_search(surgery.begin(), surgery.end(), *ancilla)) surgery.push_back(*ancilla);
        for (Cell r : surgery) add(r, MicroKind::LatticeSurgery, c, c + d);
        add(*ancilla, MicroKind::YMeasure, c + d, c + dur);
        return {std::move(a), std::nullopt};
      }
      case IsaOp::EighthRot: {
        const Cycle m = params_.m;
        FreeMask magic = free_routing_cells(layout_, occ_, c, 0, dur);
        FreeMask surgery = free_routing_cells(layout_, occ_, c, m, d);
        FreeMask distill = params_.hold_distill ? magic : free_routing_cells(layout_, occ_, c, 0, m);
        auto alloc = allocate_distillation(layout_, {&distill, &magic, &surgery}, terms[0],
                                           params_.distill_patches, params_.hold_distill);
        if (!alloc) {
          // Without a Y extension, feasibility only depends on the distill
          // and magic windows and grows as blocked cells free up.
          auto next = earliest({&distill, &magic});
          if (terms[0].axis == Axis::Y) next = step(earliest({&distill, &magic, &surgery}), c);
          return {std::nullopt, next};
        }
        for (Cell cell : alloc->distill) {
          bool in_surgery = std::find(alloc->surgery.begin(), alloc->surgery.end(), cell) != alloc->surgery.end();
          bool held = params_.hold_distill && !in_surgery;
          add(cell, MicroKind::Distill, c, held ? c + dur : c + m);
        }
        for (Cell cell : alloc->surgery) add(cell, MicroKind::LatticeSurgery, c + m, c + m + d);
        add(alloc->magic, MicroKind::YMeasure, c + m + d, c + dur);
        add(terms[0].cell, MicroKind::DataInOp, c, c + dur);
        a.distill = alloc->distill;
        return {std::move(a), std::nullopt};
      }
    }
    throw std::logic_error("unknown instruction");
  }

  void commit(const Attempt& a) {
    for (const auto& u : a.micros) occ_.reserve(layout_.index(u.patch), u.start, u.end);
  }

 private:
  // Heuristic choices can flip when cells become busy as well as free, so
  // those failures fall back to probing the next cycle.
  static std::optional<Cycle> step(std::optional<Cycle> next, Cycle c) {
    if (!next) return std::nullopt;
    return c + 1;
  }

  std::optional<Cell> pick_ancilla(const std::vector<Cell>& region, const std::vector<Terminal>& terms,
                                   const FreeMask& anc) const {
    for (Cell r : region) {
      if (anc[layout_.index(r)]) return r;
    }
    std::vector<Cell> around;
    if (region.empty()) {
      for (const auto& t : terms) {
        for (Cell n : layout_.access_cells(t.cell, t.axis)) around.push_back(n);
      }
      std::sort(around.begin(), around.end());
      for (Cell n : around) {
        if (anc[layout_.index(n)]) return n;
      }
      around.clear();
      for (const auto& t : terms) {
        for (Cell n : layout_.neighbors(t.cell)) around.push_back(n);
      }
    } else {
      for (Cell r : region) {
        for (Cell n : layout_.neighbors(r)) around.push_back(n);
      }
    }
    std::sort(around.begin(), around.end());
    for (Cell n : around) {
      if (anc[layout_.index(n)]) return n;
    }
    return std::nullopt;
  }

  const Layout& layout_;
  const ScheduleParams& params_;
  Occupancy occ_;
};

}  // namespace

Schedule schedule(const IsaProgram& program, const Layout& layout, const Mapping& mapping,
                  const ScheduleParams& params) {
  params.validate();
  if (program.flavor != IsaFlavor::Lapbc) throw std::invalid_argument("the scheduler takes LAPBC programs");
  program.validate();
  for (Qubit q = 0; q < program.qubit_count; ++q) {
    Cell c = mapping.at(q);
    if (!layout.in_bounds(c) || !layout.is_data(c))
      throw std::invalid_argument("qubit " + std::to_string(q) + " is mapped to non-data cell " + to_string(c));
  }

  Scheduler sched(layout, params);
  std::vector<Cycle> completion(program.qubit_count, 0);
  std::vector<ScheduledInstruction> records;
  std::vector<Microinstruction> busy;
  records.reserve(program.instructions.size());

  for (std::size_t id = 0; id < program.instructions.size(); ++id) {
    const auto& inst = program.instructions[id];
    std::vector<Terminal> terms;
    Cycle c = 0;
    for (const auto& [q, axis] : inst.axis.terms()) {
      terms.push_back({mapping.at(q), axis});
      c = std::max(c, completion[q]);
    }
    const Cycle dur = duration(inst, params);
    ScheduledInstruction rec{id, inst, c, dur, {}, {}};
    if (dur > 0) {
      for (;;) {
        auto result = sched.try_place(id, inst, terms, c);
        if (result.placed) {
          sched.commit(*result.placed);
          rec.start = c;
          for (const auto& u : result.placed->micros) rec.patches.push_back(u.patch);
          std::sort(rec.patches.begin(), rec.patches.end());
          rec.patches.erase(std::unique(rec.patches.begin(), rec.patches.end()), rec.patches.end());
          rec.distill_patches = std::move(result.placed->distill);
          busy.insert(busy.end(), result.placed->micros.begin(), result.placed->micros.end());
          break;
        }
        if (!result.retry_at)
          throw std::runtime_error("no feasible routing for instruction " + std::to_string(id) + " (" + inst.str() +
                                   ")");
        c = std::max(c + 1, *result.retry_at);
      }
    } else {
      for (const auto& t : terms) rec.patches.push_back(t.cell);
    }
    for (Qubit q : inst.support()) completion[q] = rec.start + dur;
    records.push_back(std::move(rec));
  }
  return Schedule(layout, std::move(records), std::move(busy));
}

void validate_schedule(const Schedule& sched, const ScheduleParams& params) {
  std::map<Cell, std::vector<const Microinstruction*>> per_patch;
  for (const auto& u : sched.busy()) {
    if (u.start >= u.end) throw std::logic_error("empty microinstruction on " + to_string(u.patch));
    per_patch[u.patch].push_back(&u);
  }
  for (auto& [cell, list] : per_patch) {
    std::sort(list.begin(), list.end(), [](auto* a, auto* b) { return a->start < b->start; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i]->start < list[i - 1]->end)
        throw std::logic_error("overlapping microinstructions on patch " + to_string(cell));
    }
  }
  std::map<Qubit, Cycle> last_end;
  std::map<Qubit, Cycle> load;
  for (const auto& rec : sched.instructions()) {
    if (rec.duration != duration(rec.instruction, params))
      throw std::logic_error("instruction " + std::to_string(rec.id) + " has the wrong duration");
    for (Qubit q : rec.instruction.support()) {
      if (rec.start < last_end[q])
        throw std::logic_error("instruction " + std::to_string(rec.id) + " starts before its predecessor on qubit " +
                               std::to_string(q) + " ends");
      last_end[q] = rec.start + rec.duration;
      load[q] += rec.duration;
    }
  }
  for (const auto& [q, total] : load) {
    if (sched.makespan() < total) throw std::logic_error("makespan below the lower bound of qubit " + std::to_string(q));
  }
}

}  // namespace lapbc
