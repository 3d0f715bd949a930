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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lapbc/layout.hpp"

namespace lapbc {

using Cycle = std::int64_t;

/// Busy intervals [begin, end) per patch.
class Occupancy {
 public:
  explicit Occupancy(std::size_t cell_count) : busy_(cell_count) {}

  /// End of the earliest busy interval on `cell` overlapping [begin, end).
  std::optional<Cycle> first_conflict(std::size_t cell, Cycle begin, Cycle end) const;
  bool is_free(std::size_t cell, Cycle begin, Cycle end) const { return !first_conflict(cell, begin, end); }

  /// Throws std::logic_error on overlap with an existing reservation.
  void reserve(std::size_t cell, Cycle begin, Cycle end);

 private:
  std::vector<std::map<Cycle, Cycle>> busy_;
};

/// Routing cells that are free over one time window, plus the earliest
/// cycle shift at which any currently blocked cell could become free.
struct FreeMask {
  std::vector<char> free;  // indexed by Layout::index
  std::optional<Cycle> next_change;

  bool operator[](std::size_t i) const { return free[i] != 0; }
};

/// Free routing cells over [start + offset, start + offset + length).
/// `next_change` is reported as a candidate *start* cycle.
FreeMask free_routing_cells(const Layout& layout, const Occupancy& occ, Cycle start, Cycle offset, Cycle length);

struct Terminal {
  Cell cell;
  Axis axis;
};

/// Smallest connected set of free routing cells that touches, for every
/// terminal, an edge matching its axis: a Z (north/south) edge for Z, an X
/// (east/west) edge for X, and one of each for Y.
///
/// Two adjacent data patches whose shared edge matches both axes need no
/// routing cells and give an empty region. Exact for two non-Y terminals;
/// with Y terminals or more than two terminals a best-over-orderings
/// shortest-path heuristic is used. nullopt when no region exists.
std::optional<std::vector<Cell>> route_surgery(const Layout& layout, const FreeMask& free,
                                               std::span<const Terminal> terminals);

/// True iff the two terminals can merge directly across a shared edge.
bool direct_surgery(Cell a, Axis axis_a, Cell b, Axis axis_b);

/// Shortest path of free cells from any cell of `from` to any cell of `to`,
/// inclusive of both ends. Ties resolve lexicographically.
std::optional<std::vector<Cell>> shortest_path(const Layout& layout, const FreeMask& free, std::span<const Cell> from,
                                               std::span<const Cell> to);

struct DistillAllocation {
  std::vector<Cell> distill;  // D cells, sorted, including `magic`
  Cell magic;
  std::vector<Cell> surgery;  // magic cell plus any cells needed to reach a Y target
};

struct DistillMasks {
  const FreeMask* distill;  // free for the distillation phase
  const FreeMask* magic;    // free for the whole instruction
  const FreeMask* surgery;  // free for the lattice surgery phase
};

/// Allocates D connected routing cells for in-place distillation next to
/// `target`. One of them, adjacent to the target edge matching its axis,
/// holds the magic state. Among all connected D-sets the one with the
/// smallest graph diameter wins; ties go to the smallest total Manhattan
/// distance to the target, then lexicographic order. With `hold_distill`
/// a Y extension avoids the other distillation cells whenever it can.
std::optional<DistillAllocation> allocate_distillation(const Layout& layout, const DistillMasks& masks,
                                                       Terminal target, int patches, bool hold_distill = false);

/// Graph diameter of the subgraph induced by `cells` (unreachable pairs
/// count as infinite).
int induced_diameter(std::span<const Cell> cells);

}  // namespace lapbc
