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
#include <stdexcept>

#include "lapbc/circuit.hpp"
#include "lapbc/random.hpp"

namespace lapbc {

std::vector<std::pair<Qubit, Qubit>> grid_edges(int width, int height) {
  std::vector<std::pair<Qubit, Qubit>> edges;
  auto id = [width](int r, int c) { return static_cast<Qubit>(r * width + c); };
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c + 1 < width; ++c) edges.emplace_back(id(r, c), id(r, c + 1));
  }
  for (int r = 0; r + 1 < height; ++r) {
    for (int c = 0; c < width; ++c) edges.emplace_back(id(r, c), id(r + 1, c));
  }
  return edges;
}

namespace {

void check_grid(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
}

void bookend_start(Circuit& c) {
  for (Qubit q = 0; q < c.qubit_count; ++q) c.instructions.push_back(IrInstruction::init(q));
}

void bookend_end(Circuit& c) {
  for (Qubit q = 0; q < c.qubit_count; ++q) c.instructions.push_back(IrInstruction::measure(q));
}

}  // namespace

Circuit gen_rcs(int width, int height, int layers, std::uint64_t seed) {
  check_grid(width, height);
  if (layers < 0) throw std::invalid_argument("layer count must be non-negative");
  Circuit c;
  c.qubit_count = static_cast<std::size_t>(width) * height;
  const auto edges = grid_edges(width, height);
  c.instructions.reserve(2 * c.qubit_count + layers * (edges.size() + c.qubit_count));
  bookend_start(c);
  Rng rng(seed);
  static constexpr IrOp choices[] = {IrOp::S, IrOp::H, IrOp::T};
  for (int layer = 0; layer < layers; ++layer) {
    for (auto [a, b] : edges) c.instructions.push_back(IrInstruction::cz(a, b));
    for (Qubit q = 0; q < c.qubit_count; ++q) {
      c.instructions.push_back(IrInstruction::single(choices[uniform_below(rng, 3)], q));
    }
  }
  bookend_end(c);
  return c;
}

double trotter_gamma() { return 1.0 / (4.0 - std::cbrt(4.0)); }

std::vector<TrotterFactor> trotter_sequence(int steps, double t) {
  if (steps < 1) throw std::invalid_argument("Trotter step count must be at least 1");
  const double delta = t / steps;
  const double g = trotter_gamma();
  // U4 = U2(g)^2 U2(1-4g) U2(g)^2, each U2(c) = B(c/2) A(c) B(c/2).
  const double inner[5] = {g * delta, g * delta, (1 - 4 * g) * delta, g * delta, g * delta};
  std::vector<TrotterFactor> seq;
  double pending_b = 0;
  for (int s = 0; s < steps; ++s) {
    for (double c : inner) {
      pending_b += c / 2;
      seq.push_back({TrotterTerm::B, pending_b});
      seq.push_back({TrotterTerm::A, c});
      pending_b = c / 2;
    }
  }
  seq.push_back({TrotterTerm::B, pending_b});
  return seq;
}

Circuit gen_ising(int width, int height, int steps, double J, double g, double t) {
  check_grid(width, height);
  Circuit c;
  c.qubit_count = static_cast<std::size_t>(width) * height;
  const auto edges = grid_edges(width, height);
  bookend_start(c);
  for (const auto& f : trotter_sequence(steps, t)) {
    if (f.term == TrotterTerm::A) {
      // exp(i J c Z_j Z_k) = CX(j,k) exp(i J c Z_k) CX(j,k)
      for (auto [j, k] : edges) {
        c.instructions.push_back(IrInstruction::cx(j, k));
        c.instructions.push_back(IrInstruction::rz(k, J * f.coefficient));
        c.instructions.push_back(IrInstruction::cx(j, k));
      }
    } else {
      // exp(-i g c X_j) = H exp(-i g c Z_j) H
      for (Qubit q = 0; q < c.qubit_count; ++q) {
        c.instructions.push_back(IrInstruction::single(IrOp::H, q));
        c.instructions.push_back(IrInstruction::rz(q, -g * f.coefficient));
        c.instructions.push_back(IrInstruction::single(IrOp::H, q));
      }
    }
  }
  bookend_end(c);
  return c;
}

}  // namespace lapbc
