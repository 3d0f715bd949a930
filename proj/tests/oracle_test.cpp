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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lapbc/transpiler.hpp"
#include "test_util.hpp"

namespace lapbc::oracle {
namespace {

using testing::Mat;
constexpr double kPi = std::numbers::pi;

double gap(const DenseMatrix& a, const Mat& b) {
  double d = 0;
  for (std::size_t r = 0; r < b.n; ++r)
    for (std::size_t c = 0; c < b.n; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

Mat lin(Complex x, const Mat& a, Complex y, const Mat& b) {
  Mat out(a.n);
  for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = x * a.a[i] + y * b.a[i];
  return out;
}

Mat pm(const char* text, std::size_t n) { return testing::pauli(SignedPauli::parse(text), n); }

Circuit circuit(std::size_t n, std::vector<IrInstruction> body) {
  Circuit c;
  c.qubit_count = n;
  c.instructions = std::move(body);
  return c;
}

TEST(Matrices, QuarterAndEighth) {
  Mat i = testing::eye(2), z = pm("+Z0", 1);
  DenseMatrix q = rotation_matrix({RotationKind::Quarter, SignedPauli::parse("+Z0")}, 1);
  EXPECT_LT(gap(q, lin(1 / std::sqrt(2.0), i, Complex(0, 1 / std::sqrt(2.0)), z)), 1e-12);
  DenseMatrix e = rotation_matrix({RotationKind::Eighth, SignedPauli::parse("-X0Y1")}, 2);
  EXPECT_LT(gap(e, testing::expi(kPi / 8, SignedPauli::parse("-X0Y1"), 2)), 1e-12);
}

TEST(Matrices, TextbookGates) {
  const Complex I(0, 1);
  Mat x0 = pm("+X0", 2), z0 = pm("+Z0", 2), id = testing::eye(4);
  double r = 1 / std::sqrt(2.0);
  EXPECT_LT(gap(gate_matrix(IrInstruction::single(IrOp::H, 0), 2), lin(r, x0, r, z0)), 1e-12);
  Mat s = lin((1.0 + I) / 2.0, id, (1.0 - I) / 2.0, z0);
  EXPECT_LT(gap(gate_matrix(IrInstruction::single(IrOp::S, 0), 2), s), 1e-12);
  Complex w = std::exp(I * kPi / 4.0);
  Mat t = lin((1.0 + w) / 2.0, id, (1.0 - w) / 2.0, z0);
  EXPECT_LT(gap(gate_matrix(IrInstruction::single(IrOp::T, 0), 2), t), 1e-12);
  // CX(0 -> 1) = (I + Z0)/2 + (I - Z0)/2 X1
  Mat p0 = lin(0.5, id, 0.5, z0), p1 = lin(0.5, id, -0.5, z0);
  Mat cx = lin(1.0, p0, 1.0, testing::mul(p1, pm("+X1", 2)));
  EXPECT_LT(gap(gate_matrix(IrInstruction::cx(0, 1), 2), cx), 1e-12);
  Mat cz = lin(1.0, p0, 1.0, testing::mul(p1, pm("+Z1", 2)));
  EXPECT_LT(gap(gate_matrix(IrInstruction::cz(1, 0), 2), cz), 1e-12);
  EXPECT_LT(gap(gate_matrix(IrInstruction::rz(1, 0.3), 2), testing::expi(0.3, SignedPauli::parse("+Z1"), 2)), 1e-12);
  EXPECT_THROW(gate_matrix(IrInstruction::measure(0), 2), std::invalid_argument);
  EXPECT_THROW(gate_matrix(IrInstruction::single(IrOp::H, 2), 2), std::invalid_argument);
}

TEST(Unitary, EmptyAndOrder) {
  EXPECT_LT(unitary_of({}, 3).distance(DenseMatrix::identity(8)), 1e-15);
  std::vector<Op> ops{IrInstruction::single(IrOp::H, 0), IrInstruction::single(IrOp::S, 0)};
  DenseMatrix u = unitary_of(ops, 1);
  DenseMatrix expect = gate_matrix(IrInstruction::single(IrOp::S, 0), 1) * gate_matrix(IrInstruction::single(IrOp::H, 0), 1);
  EXPECT_LT(u.distance(expect), 1e-12);
  EXPECT_NEAR(std::abs((u.adjoint() * expect).trace()), 2.0, 1e-12);
  EXPECT_THROW(unitary_of({}, kMaxQubits + 1), std::invalid_argument);
}

TEST(Unitary, CliffordAsQuartersMatchesUpToPhase) {
  for (IrOp op : {IrOp::H, IrOp::S, IrOp::Sdg, IrOp::CX, IrOp::CZ}) {
    IrInstruction g = op == IrOp::CX ? IrInstruction::cx(1, 0) : op == IrOp::CZ ? IrInstruction::cz(0, 1)
                                                                                : IrInstruction::single(op, 1);
    std::vector<Op> ops;
    for (const auto& r : clifford_as_quarters(g)) ops.push_back(r);
    DenseMatrix a = unitary_of(ops, 2), b = gate_matrix(g, 2);
    EXPECT_NEAR(std::abs((a.adjoint() * b).trace()), 4.0, 1e-9) << static_cast<int>(op);
  }
}

TEST(Distribution, Examples) {
  auto h = distribution(circuit(1, {IrInstruction::single(IrOp::H, 0), IrInstruction::measure(0)}));
  EXPECT_NEAR(h.at("0"), 0.5, 1e-12);
  EXPECT_NEAR(h.at("1"), 0.5, 1e-12);
  auto t = distribution(circuit(1, {IrInstruction::single(IrOp::T, 0), IrInstruction::measure(0)}));
  EXPECT_NEAR(t.at("0"), 1.0, 1e-12);
  EXPECT_EQ(t.count("1"), 0u);
  auto bell = distribution(circuit(2, {IrInstruction::single(IrOp::H, 0), IrInstruction::cx(0, 1),
                                       IrInstruction::measure(1), IrInstruction::measure(0)}));
  EXPECT_NEAR(bell.at("00"), 0.5, 1e-12);
  EXPECT_NEAR(bell.at("11"), 0.5, 1e-12);
  auto interf = distribution(circuit(1, {IrInstruction::single(IrOp::H, 0), IrInstruction::single(IrOp::T, 0),
                                         IrInstruction::single(IrOp::H, 0), IrInstruction::measure(0)}));
  EXPECT_NEAR(interf.at("0"), (1 + std::cos(kPi / 4)) / 2, 1e-12);
}

TEST(Distribution, IsaSignsAndMultiQubit) {
  auto minus = distribution(parse_isa("isa spc\nqubits 1\ninit 0\nmeas -Z0\n"));
  EXPECT_NEAR(minus.at("1"), 1.0, 1e-12);
  auto x = distribution(parse_isa("isa spc\nqubits 1\nmeas +X0\n"));
  EXPECT_NEAR(x.at("0"), 0.5, 1e-12);
  auto zz = distribution(parse_isa("isa spc\nqubits 2\nmeas +X0\nmeasm +Z0Z1\nmeas +Z1\n"));
  EXPECT_NEAR(zz.at("000"), 0.25, 1e-12);
  EXPECT_NEAR(zz.at("110"), 0.25, 1e-12);
  EXPECT_EQ(zz.size(), 4u);
  double total = 0;
  for (const auto& [k, v] : zz) {
    EXPECT_EQ(k.size(), 3u);
    total += v;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  auto reinit = distribution(parse_isa("isa spc\nqubits 1\nmeas +X0\ninit 0\nmeas +Z0\n"));
  EXPECT_NEAR(reinit.at("00"), 0.5, 1e-12);
  EXPECT_NEAR(reinit.at("10"), 0.5, 1e-12);
}

TEST(TotalVariation, Basic) {
  OutcomeDistribution a{{"0", 0.5}, {"1", 0.5}}, b{{"0", 1.0}};
  EXPECT_NEAR(total_variation(a, b), 0.5, 1e-15);
  EXPECT_NEAR(total_variation(a, a), 0.0, 1e-15);
}

TEST(Equivalent, Examples) {
  Circuit ht = circuit(1, {IrInstruction::single(IrOp::H, 0), IrInstruction::single(IrOp::T, 0),
                           IrInstruction::single(IrOp::H, 0), IrInstruction::measure(0)});
  Circuit htdg = ht;
  htdg.instructions[1] = IrInstruction::single(IrOp::Tdg, 0);
  Circuit hsh = ht;
  hsh.instructions[1] = IrInstruction::single(IrOp::S, 0);
  EXPECT_TRUE(equivalent(ht, htdg, 1e-9));  // same statistics, different unitaries
  EXPECT_FALSE(equivalent(ht, hsh, 1e-9));
  EXPECT_TRUE(equivalent(ht, lapbc_transpile(ht), 1e-9));
  EXPECT_FALSE(equivalent(hsh, lapbc_transpile(ht), 1e-9));
}

TEST(Equivalent, ProvenanceMismatch) {
  Circuit c = circuit(2, {IrInstruction::single(IrOp::H, 0), IrInstruction::measure(0), IrInstruction::measure(1)});
  IsaProgram p = spc_transpile(c);
  for (auto& inst : p.instructions) inst.origin.reset();
  EXPECT_THROW(equivalent(c, p, 1e-9), std::invalid_argument);
  IsaProgram q = spc_transpile(c);
  q.instructions.push_back(IsaInstruction::measure(SignedPauli::parse("+Z0")));
  EXPECT_THROW(equivalent(c, q, 1e-9), std::invalid_argument);
}

TEST(Limits, Enforced) {
  Circuit wide;
  wide.qubit_count = kMaxQubits + 1;
  wide.instructions.push_back(IrInstruction::measure(0));
  EXPECT_THROW(distribution(wide), std::invalid_argument);
  IsaProgram p;
  p.qubit_count = 1;
  for (std::size_t k = 0; k <= kMaxMeasurements; ++k) p.instructions.push_back(IsaInstruction::measure(SignedPauli::parse("+X0")));
  EXPECT_THROW(distribution(p), std::invalid_argument);
}

TEST(Equivalent, RandomCircuitsBothFlavorsProperty) {
  Rng rng(123);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 1 + rng() % 5;
    Circuit c = testing::random_clifford_t(rng, n, 25, iter % 2 == 0);
    IsaProgram spc = spc_transpile(c), lap = lapbc_transpile(c);
    EXPECT_TRUE(equivalent(c, spc, 1e-9)) << serialize_ir(c);
    EXPECT_TRUE(equivalent(c, lap, 1e-9)) << serialize_ir(c);
  }
}

TEST(Equivalent, DetectsCorruptedProgramProperty) {
  Rng rng(321);
  int detected = 0, tried = 0;
  for (int iter = 0; iter < 100; ++iter) {
    Circuit c = testing::random_clifford_t(rng, 2 + rng() % 3, 20);
    IsaProgram p = lapbc_transpile(c);
    std::vector<std::size_t> eighths;
    for (std::size_t i = 0; i < p.instructions.size(); ++i)
      if (p.instructions[i].op == IsaOp::EighthRot) eighths.push_back(i);
    if (eighths.empty()) continue;
    auto& inst = p.instructions[eighths[rng() % eighths.size()]];
    inst.axis = inst.axis.negated();
    ++tried;
    if (!equivalent(c, p, 1e-9)) ++detected;
  }
  EXPECT_GT(tried, 20);
  EXPECT_GT(detected, 0);
}

}  // namespace
}  // namespace lapbc::oracle
