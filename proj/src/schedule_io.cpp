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

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "lapbc/circuit.hpp"
#include "lapbc/scheduler.hpp"

namespace lapbc {

namespace {

constexpr std::string_view kHeader = "patch_row,patch_col,start,end,kind,instruction_id";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = line.find(sep, pos);
    out.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, "bad number '" + std::string(field) + "'");
  return value;
}

}  // namespace

std::string schedule_csv(const Schedule& sched) {
  std::ostringstream out;
  out << kHeader << '\n';
  const Layout& layout = sched.layout();
  for (std::size_t i = 0; i < layout.cell_count(); ++i) {
    Cell c = layout.cell(i);
    for (const auto& u : sched.timeline(c)) {
      out << c.row << ',' << c.col << ',' << u.start << ',' << u.end << ',' << micro_kind_name(u.kind) << ',';
      if (u.group) out << *u.group;
      out << '\n';
    }
  }
  return out.str();
}

std::vector<Microinstruction> parse_schedule_csv(std::string_view text) {
  std::vector<Microinstruction> out;
  std::size_t line_no = 0;
  bool header = false;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header) {
      if (line != kHeader) throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");
      header = true;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 6) throw ParseError(line_no, "expected 6 fields");
    MicroKind kind;
    try {
      kind = parse_micro_kind(f[4]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (kind == MicroKind::IdleData || kind == MicroKind::Vacant) continue;
    if (f[5].empty()) throw ParseError(line_no, "busy microinstruction without instruction id");
    Microinstruction u{{parse_number<int>(f[0], line_no), parse_number<int>(f[1], line_no)},
                       parse_number<Cycle>(f[2], line_no),
                       parse_number<Cycle>(f[3], line_no),
                       kind,
                       parse_number<std::size_t>(f[5], line_no)};
    if (u.start >= u.end) throw ParseError(line_no, "empty interval");
    out.push_back(u);
  }
  if (!header) throw ParseError(line_no, "empty schedule");
  return out;
}

std::string snapshot(const Schedule& sched, Cycle cycle) {
  const Layout& layout = sched.layout();
  std::vector<std::string> labels(layout.cell_count());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = layout.is_data(layout.cell(i)) ? "D" : ".";
  for (const auto& u : sched.busy()) {
    if (u.start <= cycle && cycle < u.end) labels[layout.index(u.patch)] = std::to_string(*u.group);
  }
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  std::ostringstream out;
  for (int r = 0; r < layout.rows(); ++r) {
    for (int c = 0; c < layout.cols(); ++c) {
      const auto& l = labels[layout.index({r, c})];
      if (c > 0) out << ' ';
      out << std::string(width - l.size(), ' ') << l;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lapbc
