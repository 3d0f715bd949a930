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

#include <sstream>
#include <stdexcept>

#include "lapbc/circuit.hpp"
#include "lapbc/isa.hpp"

namespace lapbc {

IsaInstruction IsaInstruction::init(Qubit q, std::optional<std::size_t> origin) {
  return {IsaOp::InitZero, SignedPauli::single(Axis::Z, q), origin};
}

IsaInstruction IsaInstruction::measure(SignedPauli axis, std::optional<std::size_t> origin) {
  if (axis.is_identity()) throw std::invalid_argument("cannot measure the identity");
  IsaOp op = axis.weight() == 1 ? IsaOp::MeasureSingle : IsaOp::MeasureMulti;
  return {op, std::move(axis), origin};
}

IsaInstruction IsaInstruction::quarter(SignedPauli axis, std::optional<std::size_t> origin) {
  return {IsaOp::QuarterRot, std::move(axis), origin};
}

IsaInstruction IsaInstruction::eighth(SignedPauli axis, std::optional<std::size_t> origin) {
  return {IsaOp::EighthRot, std::move(axis), origin};
}

std::string IsaInstruction::str() const {
  switch (op) {
    case IsaOp::InitZero:
      return "init " + std::to_string(axis.terms().front().first);
    case IsaOp::MeasureSingle:
      return "meas " + axis.str();
    case IsaOp::MeasureMulti:
      return "measm " + axis.str();
    case IsaOp::QuarterRot:
      return "quarter " + axis.str();
    case IsaOp::EighthRot:
      return "eighth " + axis.str();
  }
  return "?";
}

const char* flavor_name(IsaFlavor f) { return f == IsaFlavor::Spc ? "spc" : "lapbc"; }

void IsaProgram::validate() const {
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto& inst = instructions[i];
    auto fail = [i](const std::string& what) {
      throw std::invalid_argument("isa instruction " + std::to_string(i) + ": " + what);
    };
    if (inst.axis.is_identity()) fail("identity axis");
    for (Qubit q : inst.support()) {
      if (q >= qubit_count) fail("qubit " + std::to_string(q) + " out of range");
    }
    const std::size_t w = inst.axis.weight();
    switch (inst.op) {
      case IsaOp::InitZero:
        if (w != 1) fail("init acts on one qubit");
        break;
      case IsaOp::MeasureSingle:
        if (w != 1) fail("single-qubit measurement with weight " + std::to_string(w));
        break;
      case IsaOp::MeasureMulti:
        if (w < 2) fail("multi-qubit measurement with weight 1");
        break;
      case IsaOp::QuarterRot:
        if (flavor == IsaFlavor::Spc) fail("SPC programs contain no quarter rotations");
        if (w != 2) fail("LAPBC quarter rotations act on exactly two qubits");
        break;
      case IsaOp::EighthRot:
        if (flavor == IsaFlavor::Lapbc && w != 1) fail("LAPBC eighth rotations act on exactly one qubit");
        break;
    }
  }
}

std::string serialize_isa(const IsaProgram& program) {
  std::string out = std::string("isa ") + flavor_name(program.flavor) + "\nqubits " +
                    std::to_string(program.qubit_count) + "\n";
  for (const auto& inst : program.instructions) {
    out += inst.str();
    out += '\n';
  }
  return out;
}

IsaProgram parse_isa(std::string_view text) {
  IsaProgram program;
  bool have_flavor = false;
  bool have_qubits = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    std::string arg;
    std::string extra;
    if (!(ls >> op)) continue;
    if (!(ls >> arg) || (ls >> extra)) throw ParseError(line_no, "'" + op + "' takes exactly one argument");
    try {
      if (op == "isa") {
        if (arg == "spc") {
          program.flavor = IsaFlavor::Spc;
        } else if (arg == "lapbc") {
          program.flavor = IsaFlavor::Lapbc;
        } else {
          throw ParseError(line_no, "unknown flavor '" + arg + "'");
        }
        have_flavor = true;
      } else if (op == "qubits") {
        program.qubit_count = std::stoul(arg);
        have_qubits = true;
      } else if (!have_flavor || !have_qubits) {
        throw ParseError(line_no, "expected 'isa' and 'qubits' headers first");
      } else if (op == "init") {
        if (arg.find_first_not_of("0123456789") != std::string::npos) {
          throw ParseError(line_no, "bad qubit '" + arg + "'");
        }
        program.instructions.push_back(IsaInstruction::init(static_cast<Qubit>(std::stoul(arg))));
      } else if (op == "meas" || op == "measm") {
        auto inst = IsaInstruction::measure(SignedPauli::parse(arg));
        if ((op == "meas") != (inst.op == IsaOp::MeasureSingle)) {
          throw ParseError(line_no, "'" + op + "' does not match axis weight");
        }
        program.instructions.push_back(std::move(inst));
      } else if (op == "quarter") {
        program.instructions.push_back(IsaInstruction::quarter(SignedPauli::parse(arg)));
      } else if (op == "eighth") {
        program.instructions.push_back(IsaInstruction::eighth(SignedPauli::parse(arg)));
      } else {
        throw ParseError(line_no, "unknown instruction '" + op + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_flavor || !have_qubits) throw ParseError(line_no, "missing 'isa'/'qubits' header");
  try {
    program.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  return program;
}

}  // namespace lapbc
