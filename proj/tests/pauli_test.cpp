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

#include "lapbc/pauli.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "lapbc/circuit.hpp"
#include "test_util.hpp"

namespace lapbc {
namespace {

using namespace testing;
using std::numbers::pi;

SignedPauli P(const char* s) { return SignedPauli::parse(s); }

C phase_value(Phase p) {
  static const C values[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return values[static_cast<int>(p)];
}

TEST(SignedPauli, ParseAndPrint) {
  EXPECT_EQ(P("+X0Z1").str(), "+X0Z1");
  EXPECT_EQ(P("-Y3").sign(), Sign::Minus);
  EXPECT_TRUE(P("+I").is_identity());
  EXPECT_EQ(P("+Z2X0"), P("+X0Z2"));
  EXPECT_EQ(P("+X0Z2").support(), (std::vector<Qubit>{0, 2}));
  EXPECT_THROW(P("X0"), std::invalid_argument);
  EXPECT_THROW(P("+X0Z0"), std::invalid_argument);
  EXPECT_THROW(P("+Q1"), std::invalid_argument);
}

TEST(Multiply, Examples) {
  auto xy = multiply(P("+X0"), P("+Y0"));
  EXPECT_EQ(xy.phase, Phase::I);
  EXPECT_EQ(xy.pauli, P("+Z0"));

  auto zz = multiply(P("+Z0"), P("+Z0"));
  EXPECT_EQ(zz.phase, Phase::One);
  EXPECT_TRUE(zz.pauli.is_identity());

  auto two = multiply(P("+X0Z1"), P("+Y0Z1"));
  EXPECT_EQ(two.phase, Phase::I);
  EXPECT_EQ(two.pauli, P("+Z0"));
}

TEST(Multiply, MatchesDenseProduct) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_pauli(rng, 3);
    auto q = random_pauli(rng, 3);
    auto r = multiply(p, q);
    EXPECT_EQ(r.pauli.sign(), Sign::Plus);
    Mat expected = mul(pauli(p, 3), pauli(q, 3));
    Mat got = pauli(r.pauli, 3);
    for (auto& v : got.a) v *= phase_value(r.phase);
    EXPECT_LT(max_diff(expected, got), 1e-12) << p.str() << " * " << q.str();
  }
}

TEST(Multiply, GroupLaws) {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_pauli(rng, 4), b = random_pauli(rng, 4), c = random_pauli(rng, 4);
    auto ab = multiply(a, b);
    auto ab_c = multiply(ab.pauli, c);
    auto bc = multiply(b, c);
    auto a_bc = multiply(a, bc.pauli);
    EXPECT_EQ(ab_c.pauli, a_bc.pauli);
    EXPECT_EQ((static_cast<int>(ab.phase) + static_cast<int>(ab_c.phase)) % 4,
              (static_cast<int>(bc.phase) + static_cast<int>(a_bc.phase)) % 4);
    auto aa = multiply(a, a);
    EXPECT_EQ(aa.phase, Phase::One);
    EXPECT_TRUE(aa.pauli.is_identity());
  }
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(P("+Z0"), P("+Z0X1")));
  EXPECT_FALSE(commutes(P("+X0"), P("+Z0")));
  EXPECT_TRUE(commutes(P("+X0Z1"), P("+Z0X1")));
}

TEST(Commutes, MatchesDenseCommutator) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_pauli(rng, 3), q = random_pauli(rng, 3);
    Mat pq = mul(pauli(p, 3), pauli(q, 3)), qp = mul(pauli(q, 3), pauli(p, 3));
    EXPECT_EQ(commutes(p, q), max_diff(pq, qp) < 1e-12);
  }
}

TEST(PushRight, Examples) {
  Rotation z0{RotationKind::Quarter, P("+Z0")};
  EXPECT_EQ(push_right(z0, P("+X0")), P("+Y0"));
  EXPECT_EQ(push_right(z0, P("+Z0")), P("+Z0"));
  EXPECT_EQ(push_right(Rotation{RotationKind::Quarter, P("+X0")}, P("+Z0Z1")), P("-Y0Z1"));
  EXPECT_THROW(push_right(Rotation{RotationKind::Eighth, P("+X0")}, P("+Z0")), std::invalid_argument);
}

// exp(i pi/8 later) exp(i pi/4 P) == exp(i pi/4 P) exp(i pi/8 P'').
double push_right_residual(const SignedPauli& p, const SignedPauli& later, std::size_t n) {
  SignedPauli moved = push_right(Rotation{RotationKind::Quarter, p}, later);
  Mat lhs = mul(expi(pi / 8, later, n), expi(pi / 4, p, n));
  Mat rhs = mul(expi(pi / 4, p, n), expi(pi / 8, moved, n));
  return max_diff(lhs, rhs);
}

TEST(PushRight, AllSingleQubitCasesMatchConjugation) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    for (Sign sa : {Sign::Plus, Sign::Minus}) {
      for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
        for (Sign sb : {Sign::Plus, Sign::Minus}) {
          auto p = SignedPauli::single(a, 0, sa), later = SignedPauli::single(b, 0, sb);
          EXPECT_LT(push_right_residual(p, later, 1), 1e-12) << p.str() << " past " << later.str();
        }
      }
    }
  }
}

TEST(PushRight, RandomTwoQubitCasesMatchConjugation) {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_pauli(rng, 2, false), later = random_pauli(rng, 2, false);
    EXPECT_LT(push_right_residual(p, later, 2), 1e-12) << p.str() << " past " << later.str();
  }
}

TEST(PushRight, PreservesSupportAndCommutation) {
  Rng rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    auto later = random_pauli(rng, 4, false);
    Qubit q = static_cast<Qubit>(uniform_below(rng, 4));
    auto p = SignedPauli::single(static_cast<Axis>(uniform_below(rng, 3)), q);
    auto moved = push_right(Rotation{RotationKind::Quarter, p}, later);
    if (later.axis_at(q)) {
      EXPECT_EQ(moved.support(), later.support());
    } else {
      EXPECT_EQ(moved, later);
    }
    auto wide = random_pauli(rng, 4, false);
    auto moved_wide = push_right(Rotation{RotationKind::Quarter, wide}, later);
    EXPECT_EQ(commutes(wide, moved_wide), commutes(wide, later));
  }
}

Mat textbook(IrOp op) {
  const double s = 1 / std::sqrt(2.0);
  const C i{0, 1};
  Mat m(op == IrOp::CX || op == IrOp::CZ ? 4 : 2);
  switch (op) {
    case IrOp::H: m(0, 0) = s; m(0, 1) = s; m(1, 0) = s; m(1, 1) = -s; break;
    case IrOp::S: m(0, 0) = 1; m(1, 1) = i; break;
    case IrOp::Sdg: m(0, 0) = 1; m(1, 1) = -i; break;
    case IrOp::CX:  // control qubit 0 (low bit), target qubit 1
      m(0, 0) = 1; m(2, 2) = 1; m(1, 3) = 1; m(3, 1) = 1; break;
    case IrOp::CZ: m(0, 0) = 1; m(1, 1) = 1; m(2, 2) = 1; m(3, 3) = -1; break;
    default: break;
  }
  return m;
}

TEST(CliffordAsQuarters, Examples) {
  using R = Rotation;
  auto Q = [](const char* s) { return R{RotationKind::Quarter, P(s)}; };
  EXPECT_EQ(clifford_as_quarters(IrInstruction::single(IrOp::H, 0)),
            (std::vector<R>{Q("+Z0"), Q("+X0"), Q("+Z0")}));
  EXPECT_EQ(clifford_as_quarters(IrInstruction::single(IrOp::S, 0)), (std::vector<R>{Q("-Z0")}));
  EXPECT_EQ(clifford_as_quarters(IrInstruction::cz(0, 1)), (std::vector<R>{Q("-Z0"), Q("-Z1"), Q("+Z0Z1")}));
  EXPECT_EQ(clifford_as_quarters(IrInstruction::cx(0, 1)), (std::vector<R>{Q("-X1"), Q("-Z0"), Q("+Z0X1")}));
  EXPECT_THROW(clifford_as_quarters(IrInstruction::single(IrOp::T, 0)), std::invalid_argument);
}

TEST(CliffordAsQuarters, ReproducesTextbookUnitaries) {
  for (IrOp op : {IrOp::H, IrOp::S, IrOp::Sdg, IrOp::CX, IrOp::CZ}) {
    IrInstruction gate = op == IrOp::CX ? IrInstruction::cx(0, 1)
                         : op == IrOp::CZ ? IrInstruction::cz(0, 1)
                                          : IrInstruction::single(op, 0);
    std::size_t n = gate.is_two_qubit() ? 2 : 1;
    Mat u = eye(std::size_t{1} << n);
    for (const auto& r : clifford_as_quarters(gate)) u = mul(expi(pi / 4, r.axis, n), u);
    EXPECT_LT(diff_up_to_phase(u, textbook(op)), 1e-12) << static_cast<int>(op);
  }
}

TEST(Rotations, TIsEighthMinusZ) {
  Mat t(2);
  t(0, 0) = 1;
  t(1, 1) = std::polar(1.0, pi / 4);
  EXPECT_EQ(as_rotation(IrInstruction::single(IrOp::T, 0)).axis, P("-Z0"));
  EXPECT_LT(diff_up_to_phase(expi(pi / 8, P("-Z0"), 1), t), 1e-12);
  Mat tdg(2);
  tdg(0, 0) = 1;
  tdg(1, 1) = std::polar(1.0, -pi / 4);
  EXPECT_EQ(as_rotation(IrInstruction::single(IrOp::Tdg, 0)).axis, P("+Z0"));
  EXPECT_LT(diff_up_to_phase(expi(pi / 8, P("+Z0"), 1), tdg), 1e-12);
}

}  // namespace
}  // namespace lapbc
