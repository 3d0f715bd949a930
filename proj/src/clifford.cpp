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

#include <stdexcept>

#include "lapbc/circuit.hpp"

namespace lapbc {

namespace {

Rotation quarter(Sign s, std::vector<SignedPauli::Term> terms) {
  return Rotation{RotationKind::Quarter, SignedPauli(s, std::move(terms))};
}

}  // namespace

std::vector<Rotation> clifford_as_quarters(const IrInstruction& gate) {
  const Qubit a = gate.q0;
  const Qubit b = gate.q1;
  switch (gate.op) {
    case IrOp::H:
      return {quarter(Sign::Plus, {{a, Axis::Z}}), quarter(Sign::Plus, {{a, Axis::X}}),
              quarter(Sign::Plus, {{a, Axis::Z}})};
    case IrOp::S:
      return {quarter(Sign::Minus, {{a, Axis::Z}})};
    case IrOp::Sdg:
      return {quarter(Sign::Plus, {{a, Axis::Z}})};
    case IrOp::CX:
      return {quarter(Sign::Minus, {{b, Axis::X}}), quarter(Sign::Minus, {{a, Axis::Z}}),
              quarter(Sign::Plus, {{a, Axis::Z}, {b, Axis::X}})};
    case IrOp::CZ:
      return {quarter(Sign::Minus, {{a, Axis::Z}}), quarter(Sign::Minus, {{b, Axis::Z}}),
              quarter(Sign::Plus, {{a, Axis::Z}, {b, Axis::Z}})};
    case IrOp::Quarter:
      return {as_rotation(gate)};
    default:
      throw std::invalid_argument("not a Clifford gate with a quarter-rotation expansion");
  }
}

Rotation as_rotation(const IrInstruction& inst) {
  switch (inst.op) {
    case IrOp::T:
      return Rotation{RotationKind::Eighth, SignedPauli::single(Axis::Z, inst.q0, Sign::Minus)};
    case IrOp::Tdg:
      return Rotation{RotationKind::Eighth, SignedPauli::single(Axis::Z, inst.q0, Sign::Plus)};
    case IrOp::Eighth:
      return Rotation{RotationKind::Eighth, SignedPauli::single(inst.axis, inst.q0, inst.sign)};
    case IrOp::Quarter:
      return Rotation{RotationKind::Quarter, SignedPauli::single(inst.axis, inst.q0, inst.sign)};
    default:
      throw std::invalid_argument("instruction is not a single rotation");
  }
}

}  // namespace lapbc
