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

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lapbc/circuit.hpp"
#include "lapbc/isa.hpp"
#include "lapbc/pauli.hpp"

namespace lapbc::oracle {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline constexpr std::size_t kMaxQubits = 10;
inline constexpr std::size_t kMaxMeasurements = 12;

/// Square complex matrix, row-major. Basis index bit q is qubit q.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static DenseMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix adjoint() const;
  Complex trace() const;
  /// Largest entrywise modulus of the difference.
  double distance(const DenseMatrix& other) const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

using Op = std::variant<Rotation, IrInstruction>;

/// Matrix of a signed Pauli string on n qubits.
DenseMatrix pauli_matrix(const SignedPauli& p, std::size_t n);

/// Textbook matrix of a unitary IR gate, embedded in n qubits.
DenseMatrix gate_matrix(const IrInstruction& gate, std::size_t n);

/// cos(theta) I + i sin(theta) P with theta = pi/4 or pi/8.
DenseMatrix rotation_matrix(const Rotation& r, std::size_t n);

/// Product of the operators' matrices in circuit order (later operators on
/// the left). Throws std::invalid_argument past kMaxQubits or on a
/// non-unitary instruction.
DenseMatrix unitary_of(std::span<const Op> ops, std::size_t n);

/// Measurement outcome bitstring (in measurement order) -> probability.
using OutcomeDistribution = std::map<std::string, double>;

/// Exact distributions by depth-first enumeration of measurement branches.
OutcomeDistribution distribution(const Circuit& circuit);
OutcomeDistribution distribution(const IsaProgram& program);

double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b);

/// Compares outcome distributions, aligning ISA measurements to IR
/// measurements through their recorded origin. Throws std::invalid_argument
/// when the origins do not match the circuit's measurements one to one.
bool equivalent(const Circuit& a, const IsaProgram& b, double tol);
bool equivalent(const Circuit& a, const Circuit& b, double tol);

}  // namespace lapbc::oracle
