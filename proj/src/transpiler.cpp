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

#include "lapbc/transpiler.hpp"

#include <bit>
#include <stdexcept>

namespace lapbc {

namespace {

// i^phase * prod_q X_q^x_q Z_q^z_q, bit-packed.
struct DensePauli {
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> z;
  unsigned phase = 0;

  explicit DensePauli(std::size_t words) : x(words, 0), z(words, 0) {}

  void set(Qubit q, bool xb, bool zb) {
    std::uint64_t m = std::uint64_t{1} << (q % 64);
    if (xb) x[q / 64] |= m;
    if (zb) z[q / 64] |= m;
  }

  // this <- this * other
  void mul_right(const DensePauli& other) {
    unsigned swaps = 0;
    for (std::size_t w = 0; w < x.size(); ++w) {
      swaps += std::popcount(z[w] & other.x[w]);
      x[w] ^= other.x[w];
      z[w] ^= other.z[w];
    }
    phase = (phase + other.phase + 2 * swaps) % 4;
  }

  SignedPauli to_signed() const {
    std::vector<SignedPauli::Term> terms;
    unsigned k = phase;
    for (std::size_t w = 0; w < x.size(); ++w) {
      std::uint64_t any = x[w] | z[w];
      while (any) {
        int b = std::countr_zero(any);
        any &= any - 1;
        bool xb = (x[w] >> b) & 1;
        bool zb = (z[w] >> b) & 1;
        Axis a = xb && zb ? Axis::Y : (xb ? Axis::X : Axis::Z);
        if (a == Axis::Y) k += 3;  // XZ = -iY
        terms.emplace_back(static_cast<Qubit>(w * 64 + b), a);
      }
    }
    k %= 4;
    if (k % 2 != 0) throw std::logic_error("non-Hermitian frame image");
    return SignedPauli(k == 0 ? Sign::Plus : Sign::Minus, std::move(terms));
  }
};

// Heisenberg picture of the quarter rotations pushed so far: for an
// operation L that follows them, the rewritten axis is C^dag L C, where C
// is their product. Stored as the images of X_q and Z_q.
class CliffordFrame {
 public:
  explicit CliffordFrame(std::size_t n) : words_((n + 63) / 64) {
    img_x_.reserve(n);
    img_z_.reserve(n);
    for (Qubit q = 0; q < n; ++q) {
      img_x_.emplace_back(words_);
      img_x_.back().set(q, true, false);
      img_z_.emplace_back(words_);
      img_z_.back().set(q, false, true);
    }
  }

  DensePauli image(const SignedPauli& p) const {
    DensePauli out(words_);
    out.phase = p.sign() == Sign::Plus ? 0 : 2;
    for (const auto& [q, a] : p.terms()) {
      if (a == Axis::X) {
        out.mul_right(img_x_[q]);
      } else if (a == Axis::Z) {
        out.mul_right(img_z_[q]);
      } else {
        out.mul_right(img_x_[q]);
        out.mul_right(img_z_[q]);
        out.phase = (out.phase + 1) % 4;  // Y = iXZ
      }
    }
    return out;
  }

  SignedPauli apply(const SignedPauli& p) const { return image(p).to_signed(); }

  // Append a quarter rotation Q after the current frame. The new image of a
  // generator g is image(push_right(Q, g)) = -i image(Q) image(g) when g and
  // Q anticommute, unchanged otherwise.
  void push(const SignedPauli& quarter_axis) {
    DensePauli mq = image(quarter_axis);
    for (const auto& [q, a] : quarter_axis.terms()) {
      if (a != Axis::X) update(img_x_[q], mq);
      if (a != Axis::Z) update(img_z_[q], mq);
    }
  }

 private:
  static void update(DensePauli& g, const DensePauli& mq) {
    DensePauli r = mq;
    r.mul_right(g);
    r.phase = (r.phase + 3) % 4;
    g = std::move(r);
  }

  std::size_t words_;
  std::vector<DensePauli> img_x_;
  std::vector<DensePauli> img_z_;
};

IsaProgram transpile(const Circuit& circuit, IsaFlavor flavor) {
  circuit.validate();
  IsaProgram out;
  out.flavor = flavor;
  out.qubit_count = circuit.qubit_count;
  CliffordFrame frame(circuit.qubit_count);

  auto absorb = [&](const Rotation& r, std::size_t origin) {
    if (flavor == IsaFlavor::Spc || r.axis.weight() == 1) {
      frame.push(r.axis);
    } else {
      out.instructions.push_back(IsaInstruction::quarter(frame.apply(r.axis), origin));
    }
  };

  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const auto& inst = circuit.instructions[i];
    switch (inst.op) {
      case IrOp::InitZero:
        // Inits precede every other use of their qubit, so the frame acts
        // trivially there and nothing needs to cross it.
        out.instructions.push_back(IsaInstruction::init(inst.q0, i));
        break;
      case IrOp::MeasureZ:
        out.instructions.push_back(IsaInstruction::measure(frame.apply(SignedPauli::single(Axis::Z, inst.q0)), i));
        break;
      case IrOp::T:
      case IrOp::Tdg:
      case IrOp::Eighth:
        out.instructions.push_back(IsaInstruction::eighth(frame.apply(as_rotation(inst).axis), i));
        break;
      case IrOp::H:
      case IrOp::S:
      case IrOp::Sdg:
      case IrOp::CX:
      case IrOp::CZ:
      case IrOp::Quarter:
        for (const auto& r : clifford_as_quarters(inst)) absorb(r, i);
        break;
      case IrOp::RotateZ:
        throw std::invalid_argument("instruction " + std::to_string(i) +
                                    ": arbitrary-angle rz must be synthesized before transpilation");
    }
  }
  return out;
}

}  // namespace

IsaProgram spc_transpile(const Circuit& circuit) { return transpile(circuit, IsaFlavor::Spc); }

IsaProgram lapbc_transpile(const Circuit& circuit) { return transpile(circuit, IsaFlavor::Lapbc); }

std::int64_t spc_cost(const IsaProgram& program, int d) {
  if (program.flavor != IsaFlavor::Spc) throw std::invalid_argument("spc_cost needs an SPC program");
  std::int64_t steps = 0;
  bool any_init = false;
  for (const auto& inst : program.instructions) {
    switch (inst.op) {
      case IsaOp::InitZero:
        any_init = true;
        break;
      case IsaOp::EighthRot:
      case IsaOp::MeasureMulti:
        ++steps;
        break;
      case IsaOp::MeasureSingle:
        if (inst.axis.terms().front().second == Axis::Y) ++steps;
        break;
      case IsaOp::QuarterRot:
        throw std::invalid_argument("SPC program contains a quarter rotation");
    }
  }
  return static_cast<std::int64_t>(d) * (steps + (any_init ? 1 : 0));
}

}  // namespace lapbc
