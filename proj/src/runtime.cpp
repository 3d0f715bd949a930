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

#include "lapbc/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lapbc {

void RuntimeParams::validate() const {
  if (!(p_success > 0.0 && p_success <= 1.0)) throw std::invalid_argument("p_success must lie in (0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

int sample_distill_rounds(double p, int patches, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p_success must lie in (0, 1]");
  if (patches < 1) throw std::invalid_argument("distillation patch count must be >= 1");
  if (p == 1.0) return 1;
  std::geometric_distribution<int> failures(p);
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k < patches; ++k) best = std::min(best, failures(rng) + 1);
  return best;
}

namespace {

int phase_rank(MicroKind k) {
  switch (k) {
    case MicroKind::Distill: return 0;
    case MicroKind::DataInOp: return 1;
    case MicroKind::LatticeSurgery: return 2;
    case MicroKind::YMeasure: return 3;
    default: throw std::invalid_argument("idle microinstructions carry no phase");
  }
}

void append_unique(std::vector<std::size_t>& into, const std::vector<std::size_t>& from) {
  for (std::size_t x : from) {
    if (std::find(into.begin(), into.end(), x) == into.end()) into.push_back(x);
  }
}

}  // namespace

RuntimeModel::RuntimeModel(const Schedule& sched, const ScheduleParams& params)
    : RuntimeModel(sched.busy(), params.m) {}

RuntimeModel::RuntimeModel(std::span<const Microinstruction> busy, int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("distillation time m must be >= 1");
  std::map<Cell, std::size_t> patch_ids;
  std::map<std::pair<std::size_t, int>, Phase> by_key;
  std::map<std::pair<std::size_t, int>, Cycle> phase_end;
  for (const auto& u : busy) {
    if (u.kind == MicroKind::IdleData || u.kind == MicroKind::Vacant) continue;
    if (!u.group) throw std::invalid_argument("busy microinstruction without an instruction id");
    if (u.start >= u.end) throw std::invalid_argument("empty microinstruction interval");
    std::size_t cell = patch_ids.emplace(u.patch, patch_ids.size()).first->second;
    auto key = std::make_pair(*u.group, phase_rank(u.kind));
    auto [it, fresh] = by_key.try_emplace(key, Phase{u.kind, *u.group, u.start, 0, {}, {}, {}});
    Phase& ph = it->second;
    if (ph.start != u.start)
      throw std::invalid_argument("instruction " + std::to_string(*u.group) + " has a split " +
                                  micro_kind_name(u.kind) + " phase");
    ph.cells.push_back(cell);
    Cycle len = u.end - u.start;
    if (u.kind == MicroKind::Distill) {
      ph.length = m;
      if (len != m) ph.held.push_back(cell);
    } else {
      ph.length = std::max(ph.length, len);
    }
    makespan_ = std::max(makespan_, u.end);
    group_count_ = std::max(group_count_, *u.group + 1);
  }
  patch_count_ = patch_ids.size();
  group_phase_count_.assign(group_count_, 0);

  for (auto& [key, ph] : by_key) {
    auto sibling = [&](MicroKind k) -> const Phase* {
      auto it = by_key.find({key.first, phase_rank(k)});
      return it == by_key.end() ? nullptr : &it->second;
    };
    ph.waits_on = ph.cells;
    if (ph.kind == MicroKind::DataInOp) {
      const Phase* ls = sibling(MicroKind::LatticeSurgery);
      if (ls && ls->start == ph.start) append_unique(ph.waits_on, ls->cells);
      bool alone = !ls && !sibling(MicroKind::Distill) && !sibling(MicroKind::YMeasure);
      if (!alone) ph.held = ph.cells;
    } else if (ph.kind == MicroKind::LatticeSurgery) {
      if (const Phase* data = sibling(MicroKind::DataInOp)) append_unique(ph.waits_on, data->cells);
    }
    ++group_phase_count_[key.first];
    if (ph.kind == MicroKind::Distill) distill_groups_.push_back(key.first);
    phases_.push_back(ph);
  }
  std::sort(phases_.begin(), phases_.end(), [](const Phase& a, const Phase& b) {
    return std::make_tuple(a.start, a.group, phase_rank(a.kind)) < std::make_tuple(b.start, b.group, phase_rank(b.kind));
  });
  std::sort(distill_groups_.begin(), distill_groups_.end());
}

RuntimeResult RuntimeModel::run(std::span<const int> rounds) const {
  if (rounds.size() != distill_groups_.size())
    throw std::invalid_argument("expected " + std::to_string(distill_groups_.size()) + " round counts");
  std::vector<int> group_rounds(group_count_, 1);
  RuntimeResult result;
  for (std::size_t k = 0; k < rounds.size(); ++k) {
    if (rounds[k] < 1) throw std::invalid_argument("round counts must be >= 1");
    group_rounds[distill_groups_[k]] = rounds[k];
    if (rounds[k] > 1) {
      ++result.delayed_distills;
      result.added_cycles += static_cast<Cycle>(m_) * (rounds[k] - 1);
    }
  }

  constexpr Cycle kUnset = -1;
  std::vector<Cycle> avail(patch_count_, 0);
  std::vector<Cycle> distill_end(group_count_, kUnset), data_start(group_count_, kUnset), ls_end(group_count_, kUnset);
  std::vector<std::size_t> remaining = group_phase_count_;
  std::vector<std::vector<std::size_t>> held(group_count_);
  result.realized.assign(group_count_, {});
  std::vector<char> started(group_count_, 0);

  for (const Phase& ph : phases_) {
    const std::size_t g = ph.group;
    Cycle start = ph.start;
    for (std::size_t c : ph.waits_on) start = std::max(start, avail[c]);
    Cycle length = ph.length;
    switch (ph.kind) {
      case MicroKind::Distill:
        length = ph.length * group_rounds[g];
        break;
      case MicroKind::DataInOp:
        data_start[g] = start;
        break;
      case MicroKind::LatticeSurgery:
        start = std::max({start, distill_end[g], data_start[g]});
        break;
      case MicroKind::YMeasure:
        start = std::max(start, ls_end[g]);
        break;
      default:
        break;
    }
    Cycle end = start + length;
    if (ph.kind == MicroKind::Distill) distill_end[g] = end;
    if (ph.kind == MicroKind::LatticeSurgery) ls_end[g] = end;
    bool holds_all = ph.kind == MicroKind::DataInOp && !ph.held.empty();
    for (std::size_t c : ph.cells) avail[c] = holds_all ? start : end;
    held[g].insert(held[g].end(), ph.held.begin(), ph.held.end());

    auto& r = result.realized[g];
    if (!started[g]) {
      r = {start, holds_all ? start : end};
      started[g] = 1;
    } else {
      r.start = std::min(r.start, start);
      if (!holds_all) r.end = std::max(r.end, end);
    }
    if (--remaining[g] == 0) {
      for (std::size_t c : held[g]) avail[c] = std::max(avail[c], r.end);
      result.total_cycles = std::max(result.total_cycles, r.end);
    }
  }
  return result;
}

RuntimeResult RuntimeModel::run(double p_success, int patches, Rng& rng) const {
  std::vector<int> rounds(distill_groups_.size());
  for (int& r : rounds) r = sample_distill_rounds(p_success, patches, rng);
  return run(rounds);
}

RuntimeResult simulate(const Schedule& sched, const ScheduleParams& params, const RuntimeParams& rt,
                       std::uint64_t trial) {
  params.validate();
  rt.validate();
  RuntimeModel model(sched, params);
  Rng rng(sub_seed(rt.seed, trial));
  return model.run(rt.p_success, params.distill_patches, rng);
}

std::vector<RuntimeResult> simulate_trials(const RuntimeModel& model, const ScheduleParams& params,
                                           const RuntimeParams& rt) {
  params.validate();
  rt.validate();
  std::vector<RuntimeResult> out;
  out.reserve(rt.trials);
  for (int k = 0; k < rt.trials; ++k) {
    Rng rng(sub_seed(rt.seed, static_cast<std::uint64_t>(k)));
    out.push_back(model.run(rt.p_success, params.distill_patches, rng));
  }
  return out;
}

Summary summarize(std::span<const RuntimeResult> results) {
  if (results.empty()) throw std::invalid_argument("cannot summarize an empty result list");
  Summary s;
  s.min = s.max = results.front().total_cycles;
  double sum = 0;
  for (const auto& r : results) {
    sum += static_cast<double>(r.total_cycles);
    s.min = std::min(s.min, r.total_cycles);
    s.max = std::max(s.max, r.total_cycles);
  }
  s.mean = sum / static_cast<double>(results.size());
  if (results.size() > 1) {
    double sq = 0;
    for (const auto& r : results) sq += std::pow(static_cast<double>(r.total_cycles) - s.mean, 2);
    s.stddev = std::sqrt(sq / static_cast<double>(results.size() - 1));
  }
  return s;
}

std::string results_csv(std::span<const RuntimeResult> results) {
  std::ostringstream out;
  out << "trial,total_cycles,delayed_distills,added_cycles\n";
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    out << k << ',' << r.total_cycles << ',' << r.delayed_distills << ',' << r.added_cycles << '\n';
  }
  return out.str();
}

}  // namespace lapbc
