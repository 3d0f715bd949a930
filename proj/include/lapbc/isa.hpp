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
#include <string>
#include <string_view>
#include <vector>

#include "lapbc/pauli.hpp"

namespace lapbc {

enum class IsaFlavor : std::uint8_t { Spc, Lapbc };

enum class IsaOp : std::uint8_t { InitZero, MeasureSingle, MeasureMulti, QuarterRot, EighthRot };

struct IsaInstruction {
  IsaOp op = IsaOp::InitZero;
  SignedPauli axis;  // +Z_q for InitZero
  /// Index of the IR instruction this one descends from, when known.
  std::optional<std::size_t> origin;

  static IsaInstruction init(Qubit q, std::optional<std::size_t> origin = std::nullopt);
  /// MeasureSingle or MeasureMulti depending on the axis weight.
  static IsaInstruction measure(SignedPauli axis, std::optional<std::size_t> origin = std::nullopt);
  static IsaInstruction quarter(SignedPauli axis, std::optional<std::size_t> origin = std::nullopt);
  static IsaInstruction eighth(SignedPauli axis, std::optional<std::size_t> origin = std::nullopt);

  bool is_measurement() const { return op == IsaOp::MeasureSingle || op == IsaOp::MeasureMulti; }
  std::vector<Qubit> support() const { return axis.support(); }
  std::string str() const;

  friend bool operator==(const IsaInstruction&, const IsaInstruction&) = default;
};

struct IsaProgram {
  IsaFlavor flavor = IsaFlavor::Spc;
  std::size_t qubit_count = 0;
  std::vector<IsaInstruction> instructions;

  /// Qubit ranges plus the flavor's weight rules: SPC has no QuarterRot;
  /// LAPBC has weight-1 EighthRot, weight-2 QuarterRot and weight-1
  /// MeasureSingle.
  void validate() const;
};

const char* flavor_name(IsaFlavor f);

/// Text form: "isa spc|lapbc", "qubits N", then one of
/// `init q`, `eighth -Z0`, `quarter +X0X1`, `meas +Z3`, `measm +Z0Z1` per line.
std::string serialize_isa(const IsaProgram& program);
IsaProgram parse_isa(std::string_view text);

}  // namespace lapbc
