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

#include "lapbc/layout.hpp"

#include <array>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lapbc/circuit.hpp"

namespace lapbc {

std::string to_string(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

Layout::Layout(int rows, int cols, std::vector<CellRole> roles) : rows_(rows), cols_(cols), roles_(std::move(roles)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("layout dimensions must be positive");
  if (roles_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("layout role grid has the wrong size");
  }
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == CellRole::Data) data_cells_.push_back(cell(i));
  }
}

Layout Layout::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty layout");
  std::vector<CellRole> roles;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw std::invalid_argument("ragged layout rows");
    for (char ch : r) {
      if (ch == 'D') {
        roles.push_back(CellRole::Data);
      } else if (ch == '.') {
        roles.push_back(CellRole::Routing);
      } else {
        throw std::invalid_argument(std::string("bad layout character '") + ch + "'");
      }
    }
  }
  return Layout(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), std::move(roles));
}

std::vector<Cell> Layout::neighbors(Cell c) const {
  std::vector<Cell> out;
  out.reserve(4);
  for (Cell n : {Cell{c.row - 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
    if (in_bounds(n)) out.push_back(n);
  }
  return out;
}

std::vector<Cell> Layout::access_cells(Cell c, Axis edge) const {
  if (edge == Axis::Y) throw std::invalid_argument("access_cells takes X or Z");
  std::vector<Cell> out;
  auto candidates = edge == Axis::Z ? std::array{Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}}
                                    : std::array{Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}};
  for (Cell n : candidates) {
    if (in_bounds(n) && role(n) == CellRole::Routing) out.push_back(n);
  }
  return out;
}

std::string Layout::render() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out += is_data({r, c}) ? 'D' : '.';
    out += '\n';
  }
  return out;
}

Layout gen_standard(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("data grid dimensions must be positive");
  const int rows = 3 * ((a + 1) / 2);
  const int cols = 3 * ((b + 1) / 2);
  // Position of a data row/column inside the logical grid, or -1 for a lane.
  auto data_index = [](int x) { return x % 3 == 1 ? -1 : (x / 3) * 2 + (x % 3 == 2 ? 1 : 0); };
  std::vector<CellRole> roles(static_cast<std::size_t>(rows) * cols, CellRole::Routing);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int dr = data_index(r);
      int dc = data_index(c);
      if (dr >= 0 && dr < a && dc >= 0 && dc < b) roles[static_cast<std::size_t>(r) * cols + c] = CellRole::Data;
    }
  }
  return Layout(rows, cols, std::move(roles));
}

Layout gen_sparse(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("data grid dimensions must be positive");
  const int rows = 2 * a;
  const int cols = 2 * b;
  std::vector<CellRole> roles(static_cast<std::size_t>(rows) * cols, CellRole::Routing);
  for (int r = 0; r < rows; r += 2) {
    for (int c = 0; c < cols; c += 2) roles[static_cast<std::size_t>(r) * cols + c] = CellRole::Data;
  }
  return Layout(rows, cols, std::move(roles));
}

Layout make_layout(LayoutKind kind, int a, int b) {
  return kind == LayoutKind::Standard ? gen_standard(a, b) : gen_sparse(a, b);
}

int spc_patch_count(int n) {
  if (n < 1) throw std::invalid_argument("data qubit count must be positive");
  return static_cast<int>(std::ceil(2.0 * n + std::sqrt(8.0 * n) + 1.0));
}

Cell Mapping::at(Qubit q) const {
  if (!contains(q)) throw std::out_of_range("qubit " + std::to_string(q) + " is not mapped");
  return *cells_[q];
}

std::string Mapping::serialize() const {
  std::string out;
  for (std::size_t q = 0; q < cells_.size(); ++q) {
    if (cells_[q]) {
      out += std::to_string(q) + " " + std::to_string(cells_[q]->row) + " " + std::to_string(cells_[q]->col) + "\n";
    }
  }
  return out;
}

Mapping parse_mapping(std::string_view text, const Layout& layout) {
  std::vector<std::optional<Cell>> cells;
  std::set<Cell> used;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long q = 0;
    long long r = 0;
    long long c = 0;
    std::string extra;
    if (!(ls >> q)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(line_no, "expected '<qubit> <row> <col>'");
    }
    if (!(ls >> r >> c) || (ls >> extra)) throw ParseError(line_no, "expected '<qubit> <row> <col>'");
    if (q < 0) throw ParseError(line_no, "negative qubit index");
    Cell cell{static_cast<int>(r), static_cast<int>(c)};
    if (r < 0 || c < 0 || !layout.in_bounds(cell)) {
      throw ParseError(line_no, "cell " + to_string(cell) + " is outside the layout");
    }
    if (!layout.is_data(cell)) throw ParseError(line_no, "cell " + to_string(cell) + " is not a data cell");
    if (!used.insert(cell).second) throw ParseError(line_no, "cell " + to_string(cell) + " mapped twice");
    if (static_cast<std::size_t>(q) >= cells.size()) cells.resize(q + 1);
    if (cells[q]) throw ParseError(line_no, "qubit " + std::to_string(q) + " mapped twice");
    cells[q] = cell;
  }
  return Mapping(std::move(cells));
}

Mapping default_mapping(const Layout& layout, std::size_t qubit_count) {
  const auto& data = layout.data_cells();
  if (qubit_count > data.size()) {
    throw std::invalid_argument("layout has " + std::to_string(data.size()) + " data cells for " +
                                std::to_string(qubit_count) + " qubits");
  }
  std::vector<std::optional<Cell>> cells(data.begin(), data.begin() + qubit_count);
  return Mapping(std::move(cells));
}

}  // namespace lapbc
