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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapbc/pauli.hpp"

namespace lapbc {

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

enum class CellRole : std::uint8_t { Data, Routing };

/// A rectangular grid of surface-code patches.
///
/// Orientation convention: the north/south (horizontal) edges of a data
/// patch carry its logical Z, the east/west (vertical) edges carry X.
class Layout {
 public:
  Layout(int rows, int cols, std::vector<CellRole> roles);

  /// One string per row, 'D' for data and '.' for routing.
  static Layout from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t cell_count() const { return roles_.size(); }

  bool in_bounds(Cell c) const { return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_; }
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.row) * cols_ + c.col; }
  Cell cell(std::size_t index) const { return {static_cast<int>(index / cols_), static_cast<int>(index % cols_)}; }
  CellRole role(Cell c) const { return roles_[index(c)]; }
  bool is_data(Cell c) const { return role(c) == CellRole::Data; }

  /// Data cells in row-major order.
  const std::vector<Cell>& data_cells() const { return data_cells_; }

  /// In-bounds neighbours in lexicographic order (N, W, E, S).
  std::vector<Cell> neighbors(Cell c) const;

  /// Routing cells sharing an edge of `c` that carries the given logical
  /// operator: Z -> north/south, X -> east/west.
  std::vector<Cell> access_cells(Cell c, Axis edge) const;

  std::string render() const;

 private:
  int rows_;
  int cols_;
  std::vector<CellRole> roles_;
  std::vector<Cell> data_cells_;
};

enum class LayoutKind : std::uint8_t { Standard, Sparse };

/// a x b logical data grid in 2x2 blocks: rows follow D . D | D . D ...,
/// likewise columns; 3*ceil(a/2) x 3*ceil(b/2) patches, 2.25N for even a, b.
Layout gen_standard(int a, int b);

/// 2a x 2b patches, data on (even, even) cells: exactly 4N.
Layout gen_sparse(int a, int b);

Layout make_layout(LayoutKind kind, int a, int b);

/// Patch count of the sequential layout, ceil(2N + sqrt(8N) + 1).
int spc_patch_count(int n);

/// Logical qubit -> data cell, injective.
class Mapping {
 public:
  Mapping() = default;
  explicit Mapping(std::vector<std::optional<Cell>> cells) : cells_(std::move(cells)) {}

  std::size_t size() const { return cells_.size(); }
  bool contains(Qubit q) const { return q < cells_.size() && cells_[q].has_value(); }
  /// Throws std::out_of_range for an unmapped qubit.
  Cell at(Qubit q) const;

  std::string serialize() const;

 private:
  std::vector<std::optional<Cell>> cells_;
};

/// Lines "<qubit> <row> <col>", '#' comments.
Mapping parse_mapping(std::string_view text, const Layout& layout);

/// Qubit k goes to the k-th data cell in row-major order.
Mapping default_mapping(const Layout& layout, std::size_t qubit_count);

}  // namespace lapbc
