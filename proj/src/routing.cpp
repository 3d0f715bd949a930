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

#include "lapbc/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace lapbc {

std::optional<Cycle> Occupancy::first_conflict(std::size_t cell, Cycle begin, Cycle end) const {
  if (begin >= end) return std::nullopt;
  const auto& m = busy_.at(cell);
  auto it = m.upper_bound(begin);
  if (it != m.begin()) {
    auto prev = std::prev(it);
    if (prev->second > begin) return prev->second;
  }
  if (it != m.end() && it->first < end) return it->second;
  return std::nullopt;
}

void Occupancy::reserve(std::size_t cell, Cycle begin, Cycle end) {
  if (begin >= end) return;
  if (first_conflict(cell, begin, end)) throw std::logic_error("overlapping reservation on one patch");
  busy_.at(cell).emplace(begin, end);
}

FreeMask free_routing_cells(const Layout& layout, const Occupancy& occ, Cycle start, Cycle offset, Cycle length) {
  FreeMask mask;
  mask.free.assign(layout.cell_count(), 0);
  for (std::size_t i = 0; i < layout.cell_count(); ++i) {
    if (layout.is_data(layout.cell(i))) continue;
    auto conflict = occ.first_conflict(i, start + offset, start + offset + length);
    if (!conflict) {
      mask.free[i] = 1;
      continue;
    }
    Cycle candidate = *conflict - offset;
    if (!mask.next_change || candidate < *mask.next_change) mask.next_change = candidate;
  }
  return mask;
}

bool direct_surgery(Cell a, Axis axis_a, Cell b, Axis axis_b) {
  int dr = std::abs(a.row - b.row);
  int dc = std::abs(a.col - b.col);
  if (dr + dc != 1) return false;
  Axis needed = dr == 1 ? Axis::Z : Axis::X;
  return axis_a == needed && axis_b == needed;
}

std::optional<std::vector<Cell>> shortest_path(const Layout& layout, const FreeMask& free, std::span<const Cell> from,
                                               std::span<const Cell> to) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<char> target(layout.cell_count(), 0);
  for (Cell c : to) target[layout.index(c)] = 1;
  std::vector<Cell> sources(from.begin(), from.end());
  std::sort(sources.begin(), sources.end());
  std::vector<std::size_t> parent(layout.cell_count(), kNone);
  std::vector<char> seen(layout.cell_count(), 0);
  std::deque<std::size_t> queue;
  for (Cell c : sources) {
    std::size_t i = layout.index(c);
    if (!free[i] || seen[i]) continue;
    seen[i] = 1;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    if (target[i]) {
      std::vector<Cell> path;
      for (std::size_t j = i; j != kNone; j = parent[j]) path.push_back(layout.cell(j));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Cell n : layout.neighbors(layout.cell(i))) {
      std::size_t j = layout.index(n);
      if (seen[j] || !free[j]) continue;
      seen[j] = 1;
      parent[j] = i;
      queue.push_back(j);
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Cell> free_access(const Layout& layout, const FreeMask& free, Cell c, Axis axis) {
  std::vector<Cell> out;
  for (Cell n : layout.access_cells(c, axis)) {
    if (free[layout.index(n)]) out.push_back(n);
  }
  return out;
}

bool intersects(const std::vector<Cell>& sorted_region, const std::vector<Cell>& group) {
  return std::any_of(group.begin(), group.end(),
                     [&](Cell c) { return std::binary_search(sorted_region.begin(), sorted_region.end(), c); });
}

std::optional<std::vector<Cell>> grow_region(const Layout& layout, const FreeMask& free,
                                             const std::vector<std::vector<Cell>>& groups,
                                             const std::vector<std::size_t>& order) {
  std::vector<Cell> region;
  if (order.size() == 1) {
    region.push_back(*std::min_element(groups[order[0]].begin(), groups[order[0]].end()));
    return region;
  }
  auto first = shortest_path(layout, free, groups[order[0]], groups[order[1]]);
  if (!first) return std::nullopt;
  region = *first;
  std::sort(region.begin(), region.end());
  for (std::size_t k = 2; k < order.size(); ++k) {
    const auto& group = groups[order[k]];
    if (intersects(region, group)) continue;
    auto path = shortest_path(layout, free, region, group);
    if (!path) return std::nullopt;
    region.insert(region.end(), path->begin() + 1, path->end());
    std::sort(region.begin(), region.end());
  }
  return region;
}

}  // namespace

std::optional<std::vector<Cell>> route_surgery(const Layout& layout, const FreeMask& free,
                                               std::span<const Terminal> terminals) {
  if (terminals.empty()) throw std::invalid_argument("route_surgery needs at least one terminal");
  for (const auto& t : terminals) {
    if (!layout.in_bounds(t.cell) || !layout.is_data(t.cell))
      throw std::invalid_argument("surgery terminal " + to_string(t.cell) + " is not a data patch");
  }
  if (terminals.size() == 2 && direct_surgery(terminals[0].cell, terminals[0].axis, terminals[1].cell, terminals[1].axis))
    return std::vector<Cell>{};

  std::vector<std::vector<Cell>> groups;
  for (const auto& t : terminals) {
    for (Axis a : {Axis::Z, Axis::X}) {
      if (t.axis != Axis::Y && t.axis != a) continue;
      auto g = free_access(layout, free, t.cell, a);
      if (g.empty()) return std::nullopt;
      groups.push_back(std::move(g));
    }
  }

  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  bool exhaustive = groups.size() > 2 && groups.size() <= 6;
  std::optional<std::vector<Cell>> best;
  do {
    auto region = grow_region(layout, free, groups, order);
    if (!region) continue;
    if (!best || region->size() < best->size() || (region->size() == best->size() && *region < *best))
      best = std::move(region);
  } while (exhaustive && std::next_permutation(order.begin(), order.end()));
  return best;
}

int induced_diameter(std::span<const Cell> cells) {
  int n = static_cast<int>(cells.size());
  int diameter = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (dist[j] >= 0) continue;
        if (std::abs(cells[i].row - cells[j].row) + std::abs(cells[i].col - cells[j].col) != 1) continue;
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
    }
    for (int d : dist) {
      if (d < 0) return std::numeric_limits<int>::max();
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

namespace {

// All connected sets of `size` free cells containing `root`, as sorted
// index vectors.
std::set<std::vector<std::size_t>> connected_sets(const Layout& layout, const FreeMask& free, std::size_t root,
                                                  int size) {
  std::set<std::vector<std::size_t>> level{{root}};
  for (int k = 1; k < size; ++k) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      for (std::size_t i : s) {
        for (Cell n : layout.neighbors(layout.cell(i))) {
          std::size_t j = layout.index(n);
          if (!free[j] || std::binary_search(s.begin(), s.end(), j)) continue;
          auto grown = s;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), j), j);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  return level;
}

}  // namespace

std::optional<DistillAllocation> allocate_distillation(const Layout& layout, const DistillMasks& masks,
                                                       Terminal target, int patches, bool hold_distill) {
  if (patches < 1) throw std::invalid_argument("distillation needs at least one patch");
  if (!layout.in_bounds(target.cell) || !layout.is_data(target.cell))
    throw std::invalid_argument("distillation target " + to_string(target.cell) + " is not a data patch");

  struct Candidate {
    int diameter;
    int distance;
    std::vector<Cell> cells;
    Cell magic;
    Axis magic_edge;
    auto key() const { return std::tie(diameter, distance, cells, magic); }
  };
  std::vector<Candidate> candidates;
  for (Axis edge : {Axis::Z, Axis::X}) {
    if (target.axis != Axis::Y && target.axis != edge) continue;
    for (Cell magic : layout.access_cells(target.cell, edge)) {
      std::size_t root = layout.index(magic);
      if (!(*masks.magic)[root] || !(*masks.distill)[root]) continue;
      for (const auto& set : connected_sets(layout, *masks.distill, root, patches)) {
        if (static_cast<int>(set.size()) != patches) continue;
        Candidate c{0, 0, {}, magic, edge};
        for (std::size_t i : set) {
          Cell cell = layout.cell(i);
          c.cells.push_back(cell);
          c.distance += std::abs(cell.row - target.cell.row) + std::abs(cell.col - target.cell.col);
        }
        c.diameter = induced_diameter(c.cells);
        candidates.push_back(std::move(c));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });

  for (const auto& c : candidates) {
    DistillAllocation alloc{c.cells, c.magic, {c.magic}};
    if (target.axis == Axis::Y) {
      Axis other = c.magic_edge == Axis::Z ? Axis::X : Axis::Z;
      FreeMask mask = *masks.surgery;
      mask.free[layout.index(c.magic)] = 1;
      // Held cells are only crossed when no other path exists.
      FreeMask avoid = mask;
      if (hold_distill) {
        for (Cell h : c.cells) {
          if (h != c.magic) avoid.free[layout.index(h)] = 0;
        }
      }
      std::optional<std::vector<Cell>> path;
      for (const FreeMask* mk : {&avoid, &mask}) {
        auto goal = free_access(layout, *mk, target.cell, other);
        if (!goal.empty()) path = shortest_path(layout, *mk, std::span<const Cell>(&c.magic, 1), goal);
        if (path) break;
      }
      if (!path) continue;
      alloc.surgery.insert(alloc.surgery.end(), path->begin() + 1, path->end());
    }
    return alloc;
  }
  return std::nullopt;
}

}  // namespace lapbc
