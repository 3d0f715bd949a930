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

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "lapbc/circuit.hpp"

namespace lapbc {

namespace {

double wrap_angle(double theta) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double r = std::fmod(theta, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0;
  return r;
}

const char* op_name(IrOp op) {
  switch (op) {
    case IrOp::InitZero: return "init";
    case IrOp::MeasureZ: return "measure";
    case IrOp::H: return "h";
    case IrOp::S: return "s";
    case IrOp::Sdg: return "sdg";
    case IrOp::T: return "t";
    case IrOp::Tdg: return "tdg";
    case IrOp::CX: return "cx";
    case IrOp::CZ: return "cz";
    case IrOp::RotateZ: return "rz";
    case IrOp::Eighth: return "eighth";
    case IrOp::Quarter: return "quarter";
  }
  return "?";
}

// Shared by validate() and the parser so both report the same way; `where`
// prefixes the message.
void check_instruction(const IrInstruction& inst, std::size_t qubit_count, std::vector<std::uint8_t>& state,
                       const std::string& where) {
  // state: 0 = untouched, 1 = in use, 2 = measured
  auto qs = inst.qubits();
  for (Qubit q : qs) {
    if (q >= qubit_count) {
      throw std::invalid_argument(where + "qubit " + std::to_string(q) + " out of range (register has " +
                                  std::to_string(qubit_count) + ")");
    }
  }
  if (inst.is_two_qubit() && inst.q0 == inst.q1) {
    throw std::invalid_argument(where + std::string(op_name(inst.op)) + " needs two distinct qubits");
  }
  for (Qubit q : qs) {
    if (state[q] == 2) {
      throw std::invalid_argument(where + "qubit " + std::to_string(q) + " used after measurement");
    }
    if (inst.op == IrOp::InitZero && state[q] != 0) {
      throw std::invalid_argument(where + "init of qubit " + std::to_string(q) + " after it was already used");
    }
  }
  for (Qubit q : qs) {
    state[q] = inst.op == IrOp::MeasureZ ? 2 : 1;
  }
}

}  // namespace

IrInstruction IrInstruction::rz(Qubit q, double angle) {
  IrInstruction r{IrOp::RotateZ, q};
  r.angle = wrap_angle(angle);
  return r;
}

std::vector<Qubit> IrInstruction::qubits() const {
  if (is_two_qubit()) return {q0, q1};
  return {q0};
}

void Circuit::validate() const {
  if (qubit_count == 0) {
    throw std::invalid_argument("circuit must declare at least one qubit");
  }
  std::vector<std::uint8_t> state(qubit_count, 0);
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    check_instruction(instructions[i], qubit_count, state, "instruction " + std::to_string(i) + ": ");
  }
}

Circuit parse_ir(std::string_view text) {
  Circuit circuit;
  std::vector<std::uint8_t> state;
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    auto qubit_arg = [&](std::size_t i) -> Qubit {
      const std::string& s = tok.at(i);
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line_no, "expected a qubit index, got '" + s + "'");
      }
      return static_cast<Qubit>(std::stoul(s));
    };
    auto expect_args = [&](std::size_t n) {
      if (tok.size() != n + 1) {
        throw ParseError(line_no, "'" + tok[0] + "' takes " + std::to_string(n) + " argument(s)");
      }
    };

    const std::string& op = tok[0];
    if (!have_header) {
      if (op != "qubits") throw ParseError(line_no, "expected 'qubits N' header");
      expect_args(1);
      circuit.qubit_count = qubit_arg(1);
      if (circuit.qubit_count == 0) throw ParseError(line_no, "qubit count must be positive");
      state.assign(circuit.qubit_count, 0);
      have_header = true;
      continue;
    }

    IrInstruction inst;
    if (op == "init" || op == "measure" || op == "h" || op == "s" || op == "sdg" || op == "t" || op == "tdg") {
      expect_args(1);
      static const std::pair<const char*, IrOp> singles[] = {
          {"init", IrOp::InitZero}, {"measure", IrOp::MeasureZ}, {"h", IrOp::H},     {"s", IrOp::S},
          {"sdg", IrOp::Sdg},       {"t", IrOp::T},              {"tdg", IrOp::Tdg}};
      for (const auto& [name, kind] : singles) {
        if (op == name) inst = IrInstruction::single(kind, qubit_arg(1));
      }
    } else if (op == "cx" || op == "cz") {
      expect_args(2);
      inst = op == "cx" ? IrInstruction::cx(qubit_arg(1), qubit_arg(2)) : IrInstruction::cz(qubit_arg(1), qubit_arg(2));
    } else if (op == "rz") {
      expect_args(2);
      double angle = 0;
      try {
        std::size_t used = 0;
        angle = std::stod(tok[2], &used);
        if (used != tok[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad angle '" + tok[2] + "'");
      }
      if (!std::isfinite(angle)) throw ParseError(line_no, "angle must be finite");
      inst = IrInstruction::rz(qubit_arg(1), angle);
    } else if (op == "eighth" || op == "quarter") {
      expect_args(2);
      const std::string& ax = tok[2];
      if (ax.size() != 2 || (ax[0] != '+' && ax[0] != '-')) {
        throw ParseError(line_no, "expected a signed axis like +X, got '" + ax + "'");
      }
      Axis a;
      try {
        a = parse_axis(ax[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      Sign s = ax[0] == '+' ? Sign::Plus : Sign::Minus;
      inst = op == "eighth" ? IrInstruction::eighth(qubit_arg(1), a, s) : IrInstruction::quarter(qubit_arg(1), a, s);
    } else if (op == "qubits") {
      throw ParseError(line_no, "duplicate 'qubits' header");
    } else {
      throw ParseError(line_no, "unknown instruction '" + op + "'");
    }

    try {
      check_instruction(inst, circuit.qubit_count, state, "");
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    circuit.instructions.push_back(inst);
  }
  if (!have_header) throw ParseError(line_no, "missing 'qubits N' header");
  return circuit;
}

std::string serialize_ir(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
  char buf[64];
  for (const auto& inst : circuit.instructions) {
    out += op_name(inst.op);
    out += ' ';
    out += std::to_string(inst.q0);
    switch (inst.op) {
      case IrOp::CX:
      case IrOp::CZ:
        out += ' ' + std::to_string(inst.q1);
        break;
      case IrOp::RotateZ:
        std::snprintf(buf, sizeof buf, " %.17g", inst.angle);
        out += buf;
        break;
      case IrOp::Eighth:
      case IrOp::Quarter:
        out += inst.sign == Sign::Plus ? " +" : " -";
        out += axis_char(inst.axis);
        break;
      default:
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace lapbc
