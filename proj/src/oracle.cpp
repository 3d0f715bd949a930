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

#include "lapbc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace lapbc::oracle {

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex DenseMatrix::trace() const {
  Complex t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::distance(const DenseMatrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

namespace {

using std::numbers::pi;
const Complex kI{0, 1};

void check_size(std::size_t n) {
  if (n > kMaxQubits) throw std::invalid_argument("oracle limited to " + std::to_string(kMaxQubits) + " qubits");
}

void check_qubit(Qubit q, std::size_t n) {
  if (q >= n) throw std::invalid_argument("qubit " + std::to_string(q) + " outside the register");
}

StateVector pauli_times(const SignedPauli& p, const StateVector& psi, std::size_t n) {
  std::size_t flip = 0;
  for (const auto& [q, a] : p.terms()) {
    check_qubit(q, n);
    if (a != Axis::Z) flip |= std::size_t{1} << q;
  }
  StateVector out(psi.size());
  for (std::size_t x = 0; x < psi.size(); ++x) {
    Complex amp = psi[x] * static_cast<double>(static_cast<int>(p.sign()));
    for (const auto& [q, a] : p.terms()) {
      bool bit = (x >> q) & 1;
      if (a == Axis::Z && bit) amp = -amp;
      if (a == Axis::Y) amp *= bit ? -kI : kI;
    }
    out[x ^ flip] += amp;
  }
  return out;
}

void apply_rotation(StateVector& psi, const Rotation& r, std::size_t n) {
  double theta = r.kind == RotationKind::Quarter ? pi / 4 : pi / 8;
  StateVector p = pauli_times(r.axis, psi, n);
  for (std::size_t x = 0; x < psi.size(); ++x) psi[x] = std::cos(theta) * psi[x] + kI * std::sin(theta) * p[x];
}

// 2x2 matrix {a, b; c, d} on qubit q.
void apply_1q(StateVector& psi, Qubit q, Complex a, Complex b, Complex c, Complex d) {
  std::size_t bit = std::size_t{1} << q;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    if (x & bit) continue;
    Complex v0 = psi[x], v1 = psi[x | bit];
    psi[x] = a * v0 + b * v1;
    psi[x | bit] = c * v0 + d * v1;
  }
}

void apply_gate(StateVector& psi, const IrInstruction& g, std::size_t n) {
  for (Qubit q : g.qubits()) check_qubit(q, n);
  const double s = 1 / std::sqrt(2.0);
  switch (g.op) {
    case IrOp::H: return apply_1q(psi, g.q0, s, s, s, -s);
    case IrOp::S: return apply_1q(psi, g.q0, 1, 0, 0, kI);
    case IrOp::Sdg: return apply_1q(psi, g.q0, 1, 0, 0, -kI);
    case IrOp::T: return apply_1q(psi, g.q0, 1, 0, 0, std::polar(1.0, pi / 4));
    case IrOp::Tdg: return apply_1q(psi, g.q0, 1, 0, 0, std::polar(1.0, -pi / 4));
    case IrOp::RotateZ: return apply_1q(psi, g.q0, std::polar(1.0, g.angle), 0, 0, std::polar(1.0, -g.angle));
    case IrOp::CX: {
      std::size_t c = std::size_t{1} << g.q0, t = std::size_t{1} << g.q1;
      for (std::size_t x = 0; x < psi.size(); ++x) {
        if ((x & c) && !(x & t)) std::swap(psi[x], psi[x | t]);
      }
      return;
    }
    case IrOp::CZ: {
      std::size_t mask = (std::size_t{1} << g.q0) | (std::size_t{1} << g.q1);
      for (std::size_t x = 0; x < psi.size(); ++x) {
        if ((x & mask) == mask) psi[x] = -psi[x];
      }
      return;
    }
    case IrOp::Eighth:
    case IrOp::Quarter:
      return apply_rotation(
          psi, {g.op == IrOp::Eighth ? RotationKind::Eighth : RotationKind::Quarter, SignedPauli::single(g.axis, g.q0, g.sign)},
          n);
    case IrOp::InitZero:
    case IrOp::MeasureZ:
      break;
  }
  throw std::invalid_argument("not a unitary gate");
}

void apply(StateVector& psi, const Op& op, std::size_t n) {
  if (const auto* r = std::get_if<Rotation>(&op)) {
    apply_rotation(psi, *r, n);
  } else {
    apply_gate(psi, std::get<IrInstruction>(op), n);
  }
}

DenseMatrix columns_of(std::size_t n, const std::function<void(StateVector&)>& f) {
  check_size(n);
  std::size_t dim = std::size_t{1} << n;
  DenseMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector psi(dim);
    psi[j] = 1;
    f(psi);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = psi[i];
  }
  return m;
}

double norm2(const StateVector& psi) {
  double s = 0;
  for (const auto& a : psi) s += std::norm(a);
  return s;
}

// One step of a program: unitary, init, or measurement of a signed axis.
struct Step {
  enum Kind { Unitary, Init, Measure } kind;
  Op op;
  SignedPauli axis;  // measurement axis
  Qubit qubit = 0;   // init target
};

OutcomeDistribution enumerate(const std::vector<Step>& steps, std::size_t n) {
  check_size(n);
  std::size_t measurements = std::count_if(steps.begin(), steps.end(), [](const Step& s) { return s.kind == Step::Measure; });
  if (measurements > kMaxMeasurements)
    throw std::invalid_argument("oracle limited to " + std::to_string(kMaxMeasurements) + " measurements");
  OutcomeDistribution out;
  StateVector psi(std::size_t{1} << n);
  psi[0] = 1;
  std::string bits;
  std::function<void(std::size_t, StateVector, double)> walk = [&](std::size_t pc, StateVector state, double prob) {
    for (; pc < steps.size(); ++pc) {
      const Step& s = steps[pc];
      if (s.kind == Step::Unitary) {
        apply(state, s.op, n);
      } else if (s.kind == Step::Init) {
        check_qubit(s.qubit, n);
        for (std::size_t x = 0; x < state.size(); ++x) {
          if ((x >> s.qubit) & 1) state[x] = 0;
        }
        double nn = norm2(state);
        if (nn == 0) return;
        for (auto& a : state) a /= std::sqrt(nn);
      } else {
        StateVector p = pauli_times(s.axis, state, n);
        for (int b = 0; b < 2; ++b) {
          StateVector branch(state.size());
          double sign = b == 0 ? 1.0 : -1.0;
          for (std::size_t x = 0; x < state.size(); ++x) branch[x] = 0.5 * (state[x] + sign * p[x]);
          double w = norm2(branch);
          if (w <= 0) continue;
          for (auto& a : branch) a /= std::sqrt(w);
          bits.push_back(static_cast<char>('0' + b));
          walk(pc + 1, std::move(branch), prob * w);
          bits.pop_back();
        }
        return;
      }
    }
    out[bits] += prob;
  };
  walk(0, psi, 1.0);
  return out;
}

}  // namespace

DenseMatrix pauli_matrix(const SignedPauli& p, std::size_t n) {
  return columns_of(n, [&](StateVector& psi) { psi = pauli_times(p, psi, n); });
}

DenseMatrix gate_matrix(const IrInstruction& gate, std::size_t n) {
  return columns_of(n, [&](StateVector& psi) { apply_gate(psi, gate, n); });
}

DenseMatrix rotation_matrix(const Rotation& r, std::size_t n) {
  return columns_of(n, [&](StateVector& psi) { apply_rotation(psi, r, n); });
}

DenseMatrix unitary_of(std::span<const Op> ops, std::size_t n) {
  return columns_of(n, [&](StateVector& psi) {
    for (const auto& op : ops) apply(psi, op, n);
  });
}

OutcomeDistribution distribution(const Circuit& circuit) {
  std::vector<Step> steps;
  for (const auto& inst : circuit.instructions) {
    if (inst.op == IrOp::InitZero) {
      steps.push_back({Step::Init, Op{}, {}, inst.q0});
    } else if (inst.op == IrOp::MeasureZ) {
      steps.push_back({Step::Measure, Op{}, SignedPauli::single(Axis::Z, inst.q0), 0});
    } else {
      steps.push_back({Step::Unitary, inst, {}, 0});
    }
  }
  return enumerate(steps, circuit.qubit_count);
}

OutcomeDistribution distribution(const IsaProgram& program) {
  std::vector<Step> steps;
  for (const auto& inst : program.instructions) {
    switch (inst.op) {
      case IsaOp::InitZero:
        steps.push_back({Step::Init, Op{}, {}, inst.axis.terms().front().first});
        break;
      case IsaOp::MeasureSingle:
      case IsaOp::MeasureMulti:
        steps.push_back({Step::Measure, Op{}, inst.axis, 0});
        break;
      case IsaOp::QuarterRot:
        steps.push_back({Step::Unitary, Rotation{RotationKind::Quarter, inst.axis}, {}, 0});
        break;
      case IsaOp::EighthRot:
        steps.push_back({Step::Unitary, Rotation{RotationKind::Eighth, inst.axis}, {}, 0});
        break;
    }
  }
  return enumerate(steps, program.qubit_count);
}

double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  double tv = 0;
  for (const auto& [k, p] : a) {
    auto it = b.find(k);
    tv += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [k, p] : b) {
    if (!a.count(k)) tv += p;
  }
  return tv / 2;
}

bool equivalent(const Circuit& a, const IsaProgram& b, double tol) {
  if (a.qubit_count != b.qubit_count) throw std::invalid_argument("qubit counts differ");
  std::vector<std::size_t> ir_rank(a.instructions.size(), SIZE_MAX);
  std::size_t ir_measurements = 0;
  for (std::size_t i = 0; i < a.instructions.size(); ++i) {
    if (a.instructions[i].op == IrOp::MeasureZ) ir_rank[i] = ir_measurements++;
  }
  std::vector<std::size_t> perm;
  std::vector<char> used(ir_measurements, 0);
  for (const auto& inst : b.instructions) {
    if (!inst.is_measurement()) continue;
    if (!inst.origin || *inst.origin >= ir_rank.size() || ir_rank[*inst.origin] == SIZE_MAX || used[ir_rank[*inst.origin]])
      throw std::invalid_argument("measurement provenance mismatch");
    used[ir_rank[*inst.origin]] = 1;
    perm.push_back(ir_rank[*inst.origin]);
  }
  if (perm.size() != ir_measurements) throw std::invalid_argument("measurement provenance mismatch");

  OutcomeDistribution aligned;
  for (const auto& [bits, p] : distribution(b)) {
    std::string key(bits.size(), '0');
    for (std::size_t k = 0; k < bits.size(); ++k) key[perm[k]] = bits[k];
    aligned[key] += p;
  }
  return total_variation(distribution(a), aligned) <= tol;
}

bool equivalent(const Circuit& a, const Circuit& b, double tol) {
  if (a.qubit_count != b.qubit_count) throw std::invalid_argument("qubit counts differ");
  return total_variation(distribution(a), distribution(b)) <= tol;
}

}  // namespace lapbc::oracle
