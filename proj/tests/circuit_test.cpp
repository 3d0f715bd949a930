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

#include "lapbc/circuit.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "lapbc/oracle.hpp"
#include "test_util.hpp"

namespace lapbc {
namespace {

using namespace testing;
using std::numbers::pi;

TEST(ParseIr, Examples) {
  Circuit a = parse_ir("qubits 1\nh 0\nt 0\nmeasure 0");
  EXPECT_EQ(a.qubit_count, 1u);
  EXPECT_EQ(a.instructions, (std::vector<IrInstruction>{IrInstruction::single(IrOp::H, 0),
                                                        IrInstruction::single(IrOp::T, 0), IrInstruction::measure(0)}));
  Circuit b = parse_ir("qubits 2\ncx 0 1");
  EXPECT_EQ(b.instructions, std::vector<IrInstruction>{IrInstruction::cx(0, 1)});
  Circuit c = parse_ir("qubits 1\nrz 0 1.5707963267948966");
  ASSERT_EQ(c.instructions.size(), 1u);
  EXPECT_EQ(c.instructions[0].op, IrOp::RotateZ);
  EXPECT_DOUBLE_EQ(c.instructions[0].angle, pi / 2);
}

TEST(ParseIr, CommentsAndBlankLines) {
  Circuit c = parse_ir("# header\nqubits 2\n\ncz 0 1  # entangle\n");
  EXPECT_EQ(c.instructions, std::vector<IrInstruction>{IrInstruction::cz(0, 1)});
}

TEST(ParseIr, ReportsLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_ir(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("qubits 1\nfoo 0"), 2u);
  EXPECT_EQ(line_of("qubits 1\nh 0\nh 3"), 3u);
  EXPECT_EQ(line_of("qubits 2\ncx 1 1"), 2u);
  EXPECT_EQ(line_of("qubits 1\nrz 0 abc"), 2u);
  EXPECT_EQ(line_of("h 0"), 1u);
}

TEST(Circuit, ValidationRejectsReinitAndUseAfterMeasure) {
  EXPECT_THROW(parse_ir("qubits 1\nh 0\ninit 0"), ParseError);
  EXPECT_THROW(parse_ir("qubits 1\nmeasure 0\nh 0"), ParseError);
  Circuit c{1, {IrInstruction::measure(0), IrInstruction::single(IrOp::H, 0)}};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  Circuit d{2, {IrInstruction::cx(0, 1), IrInstruction::init(1)}};
  EXPECT_THROW(d.validate(), std::invalid_argument);
  EXPECT_NO_THROW(parse_ir("qubits 2\ninit 0\ninit 1\ncx 0 1\nmeasure 0\nmeasure 1"));
}

TEST(Circuit, AnglesWrapIntoRange) {
  EXPECT_NEAR(IrInstruction::rz(0, -pi / 2).angle, 3 * pi / 2, 1e-15);
  EXPECT_NEAR(IrInstruction::rz(0, 5 * pi).angle, pi, 1e-12);
  EXPECT_GE(IrInstruction::rz(0, -1e-18).angle, 0.0);
  EXPECT_LT(IrInstruction::rz(0, -1e-18).angle, 2 * pi);
}

Circuit random_circuit(Rng& rng, std::size_t n, int gates) {
  Circuit c;
  c.qubit_count = n;
  for (Qubit q = 0; q < n; ++q) c.instructions.push_back(IrInstruction::init(q));
  for (int g = 0; g < gates; ++g) {
    Qubit a = static_cast<Qubit>(uniform_below(rng, n));
    Qubit b = static_cast<Qubit>((a + 1 + uniform_below(rng, n - 1)) % n);
    switch (uniform_below(rng, 10)) {
      case 0: c.instructions.push_back(IrInstruction::single(IrOp::H, a)); break;
      case 1: c.instructions.push_back(IrInstruction::single(IrOp::S, a)); break;
      case 2: c.instructions.push_back(IrInstruction::single(IrOp::Sdg, a)); break;
      case 3: c.instructions.push_back(IrInstruction::single(IrOp::T, a)); break;
      case 4: c.instructions.push_back(IrInstruction::single(IrOp::Tdg, a)); break;
      case 5: c.instructions.push_back(IrInstruction::cx(a, b)); break;
      case 6: c.instructions.push_back(IrInstruction::cz(a, b)); break;
      case 7: c.instructions.push_back(IrInstruction::rz(a, uniform01(rng) * 20 - 10)); break;
      case 8: c.instructions.push_back(IrInstruction::eighth(a, static_cast<Axis>(uniform_below(rng, 3)), Sign::Minus)); break;
      default: c.instructions.push_back(IrInstruction::quarter(a, static_cast<Axis>(uniform_below(rng, 3)), Sign::Plus)); break;
    }
  }
  for (Qubit q = 0; q < n; ++q) c.instructions.push_back(IrInstruction::measure(q));
  return c;
}

TEST(SerializeIr, RoundTripsRandomCircuits) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Circuit c = random_circuit(rng, 2 + uniform_below(rng, 4), static_cast<int>(uniform_below(rng, 40)));
    std::string text = serialize_ir(c);
    Circuit back = parse_ir(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_ir(back), text);
  }
}

TEST(GenRcs, InstructionCounts) {
  EXPECT_EQ(gen_rcs(2, 2, 1, 7).instructions.size(), 16u);
  Circuit empty = gen_rcs(2, 2, 0, 7);
  EXPECT_EQ(empty.instructions.size(), 8u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(empty.instructions[i].op, IrOp::InitZero);
  for (std::size_t i = 4; i < 8; ++i) EXPECT_EQ(empty.instructions[i].op, IrOp::MeasureZ);
  EXPECT_EQ(gen_rcs(6, 6, 500, 3).instructions.size(), 36u + 500u * (60u + 36u) + 36u);
}

TEST(GenRcs, EdgeOrderAndDeterminism) {
  auto edges = grid_edges(3, 2);
  EXPECT_EQ(edges, (std::vector<std::pair<Qubit, Qubit>>{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(serialize_ir(gen_rcs(4, 3, 20, 99)), serialize_ir(gen_rcs(4, 3, 20, 99)));
  EXPECT_NE(serialize_ir(gen_rcs(4, 3, 20, 99)), serialize_ir(gen_rcs(4, 3, 20, 100)));
}

TEST(GenRcs, GateFrequenciesAreUniform) {
  Circuit c = gen_rcs(10, 10, 1000, 5);  // 10^5 draws
  std::array<int, 3> counts{};
  for (const auto& inst : c.instructions) {
    if (inst.op == IrOp::S) ++counts[0];
    if (inst.op == IrOp::H) ++counts[1];
    if (inst.op == IrOp::T) ++counts[2];
  }
  for (int k : counts) EXPECT_NEAR(k / 1e5, 1.0 / 3.0, 0.01);
}

TEST(Trotter, GammaAndCounts) {
  EXPECT_NEAR(trotter_gamma(), 0.41449077179437573, 1e-15);
  EXPECT_NEAR(1 - 4 * trotter_gamma(), -0.65796308717750292, 1e-14);
  for (int steps : {1, 2, 5}) {
    auto seq = trotter_sequence(steps, 1.0);
    auto a = std::count_if(seq.begin(), seq.end(), [](auto f) { return f.term == TrotterTerm::A; });
    EXPECT_EQ(a, 5 * steps);
    EXPECT_EQ(static_cast<long>(seq.size()) - a, 5 * steps + 1);
    for (std::size_t i = 0; i < seq.size(); ++i) EXPECT_EQ(seq[i].term, i % 2 ? TrotterTerm::A : TrotterTerm::B);
  }
}

TEST(Trotter, CoefficientsSumToTheStepLength) {
  for (int steps : {1, 3, 4}) {
    const double t = 0.7, delta = t / steps;
    auto seq = trotter_sequence(steps, t);
    double a_total = 0, b_total = 0;
    int a_seen = 0;
    for (const auto& f : seq) {
      if (f.term == TrotterTerm::A) {
        a_total += f.coefficient;
        if (++a_seen % 5 == 0) {
          EXPECT_NEAR(a_total, delta * (a_seen / 5), 1e-12);
        }
      } else {
        b_total += f.coefficient;
      }
    }
    EXPECT_NEAR(a_total, t, 1e-12);
    EXPECT_NEAR(b_total, t, 1e-12);
  }
}

TEST(GenIsing, RotationCounts) {
  Circuit c = gen_ising(2, 2, 1);
  auto rz = std::count_if(c.instructions.begin(), c.instructions.end(), [](auto& i) { return i.op == IrOp::RotateZ; });
  EXPECT_EQ(rz, 44);
  Circuit big = gen_ising(3, 2, 2);
  auto rz2 = std::count_if(big.instructions.begin(), big.instructions.end(), [](auto& i) { return i.op == IrOp::RotateZ; });
  EXPECT_EQ(rz2, 10 * 7 + 11 * 6);
}

// Dense exp(M) by scaling and squaring a Taylor series.
Mat expm(Mat m) {
  int squarings = 10;
  for (auto& v : m.a) v /= std::ldexp(1.0, squarings);
  Mat result = eye(m.n), term = eye(m.n);
  for (int k = 1; k < 20; ++k) {
    term = mul(term, m);
    for (auto& v : term.a) v /= static_cast<double>(k);
    for (std::size_t i = 0; i < result.a.size(); ++i) result.a[i] += term.a[i];
  }
  for (int s = 0; s < squarings; ++s) result = mul(result, result);
  return result;
}

Mat circuit_unitary(const Circuit& c) {
  std::vector<oracle::Op> ops;
  for (const auto& inst : c.instructions) {
    if (inst.op != IrOp::InitZero && inst.op != IrOp::MeasureZ) ops.push_back(inst);
  }
  auto u = oracle::unitary_of(ops, c.qubit_count);
  Mat out(u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t col = 0; col < u.dim(); ++col) out(r, col) = u(r, col);
  return out;
}

Mat ising_hamiltonian(int width, int height, double J, double g) {
  std::size_t n = static_cast<std::size_t>(width) * height;
  Mat h(std::size_t{1} << n);
  for (auto [j, k] : grid_edges(width, height)) {
    Mat zz = pauli(SignedPauli(Sign::Plus, {{j, Axis::Z}, {k, Axis::Z}}), n);
    for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] -= J * zz.a[i];
  }
  for (Qubit q = 0; q < n; ++q) {
    Mat x = pauli(SignedPauli::single(Axis::X, q), n);
    for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] += g * x.a[i];
  }
  return h;
}

TEST(GenIsing, ApproximatesTheEvolutionToFourthOrder) {
  const double J = 0.8, g = 1.3;
  auto error = [&](double t) {
    Mat h = ising_hamiltonian(2, 2, J, g);
    for (auto& v : h.a) v *= C{0, -t};
    return diff_up_to_phase(circuit_unitary(gen_ising(2, 2, 1, J, g, t)), expm(h));
  };
  double e1 = error(0.2), e2 = error(0.1);
  EXPECT_LT(e1, 1e-3);
  // Local error O(t^5): halving t shrinks it by ~32.
  EXPECT_GT(e1 / e2, 20.0);
}

}  // namespace
}  // namespace lapbc
