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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapbc/pauli.hpp"

namespace lapbc {

enum class IrOp : std::uint8_t {
  InitZero,
  MeasureZ,
  H,
  S,
  Sdg,
  T,
  Tdg,
  CX,
  CZ,
  RotateZ,
  // Synthesis output: a single-qubit rotation along a signed axis. Consumed
  // directly by the transpilers.
  Eighth,
  Quarter,
};

struct IrInstruction {
  IrOp op = IrOp::InitZero;
  Qubit q0 = 0;
  Qubit q1 = 0;       // target of CX, second qubit of CZ
  double angle = 0;   // RotateZ only: exp(i*angle*Z), angle in [0, 2pi)
  Axis axis = Axis::Z;  // Eighth/Quarter only
  Sign sign = Sign::Plus;

  static IrInstruction init(Qubit q) { return {IrOp::InitZero, q}; }
  static IrInstruction measure(Qubit q) { return {IrOp::MeasureZ, q}; }
  static IrInstruction single(IrOp op, Qubit q) { return {op, q}; }
  static IrInstruction cx(Qubit c, Qubit t) { return {IrOp::CX, c, t}; }
  static IrInstruction cz(Qubit a, Qubit b) { return {IrOp::CZ, a, b}; }
  static IrInstruction rz(Qubit q, double angle);
  static IrInstruction eighth(Qubit q, Axis a, Sign s) { return {IrOp::Eighth, q, 0, 0, a, s}; }
  static IrInstruction quarter(Qubit q, Axis a, Sign s) { return {IrOp::Quarter, q, 0, 0, a, s}; }

  bool is_two_qubit() const { return op == IrOp::CX || op == IrOp::CZ; }
  std::vector<Qubit> qubits() const;

  friend bool operator==(const IrInstruction&, const IrInstruction&) = default;
};

/// Container for an IR program. Qubits start in |0>; an explicit `init`
/// may only come before every other use of its qubit, and `measure` is
/// the last use.
struct Circuit {
  std::size_t qubit_count = 0;
  std::vector<IrInstruction> instructions;

  /// Throws std::invalid_argument naming the offending instruction index.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Circuit parse_ir(std::string_view text);
std::string serialize_ir(const Circuit& circuit);

/// Quarter-rotation expansion of H, S, Sdg, CX and CZ, first-applied first.
/// Matches the gate up to global phase.
std::vector<Rotation> clifford_as_quarters(const IrInstruction& gate);

/// The single-qubit rotation that a T, Tdg, Eighth or Quarter instruction
/// stands for (T = Eighth(-Z), Tdg = Eighth(+Z)).
Rotation as_rotation(const IrInstruction& inst);

/// Random circuit sampling: per layer, CZ on every grid edge (horizontal
/// edges row-major, then vertical edges row-major), then one of {S, H, T}
/// per qubit. Bookended by init and measure on every qubit.
Circuit gen_rcs(int width, int height, int layers, std::uint64_t seed);

enum class TrotterTerm : std::uint8_t { A, B };

struct TrotterFactor {
  TrotterTerm term;
  double coefficient;  // the Delta' multiplying the term in the exponent
};

/// The merged exponential sequence of `steps` fourth-order Trotter steps of
/// total time `t`: 5*steps A factors and 5*steps+1 B factors.
std::vector<TrotterFactor> trotter_sequence(int steps, double t);

/// (4 - 4^(1/3))^-1
double trotter_gamma();

/// 2D transverse-field Ising evolution exp(-iHt), H = -J sum ZZ + g sum X,
/// as a CX/RotateZ/H circuit on a width x height grid.
Circuit gen_ising(int width, int height, int steps, double J = 1.0, double g = 1.0, double t = 1.0);

/// Grid edges in the fixed order used by both generators.
std::vector<std::pair<Qubit, Qubit>> grid_edges(int width, int height);

}  // namespace lapbc
