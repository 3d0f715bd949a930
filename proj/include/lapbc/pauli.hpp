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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lapbc {

using Qubit = std::uint32_t;

enum class Axis : std::uint8_t { X, Y, Z };

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

/// A scalar in {+1, +i, -1, -i}, stored as the exponent k of i^k.
enum class Phase : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

char axis_char(Axis a);
Axis parse_axis(char c);

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }

/// A Hermitian n-qubit Pauli string with a +1 or -1 sign.
///
/// Only non-identity factors are stored, sorted by qubit index. The empty
/// string is the identity. Non-real phases never live here; `multiply`
/// returns them separately.
class SignedPauli {
 public:
  using Term = std::pair<Qubit, Axis>;

  SignedPauli() = default;

  /// Terms may arrive in any order; repeated qubits are rejected.
  SignedPauli(Sign sign, std::vector<Term> terms);

  static SignedPauli single(Axis axis, Qubit q, Sign sign = Sign::Plus);

  /// Parses the compact form used in text files: "+X0Z1", "-Y3", "+I".
  static SignedPauli parse(std::string_view text);

  Sign sign() const { return sign_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t weight() const { return terms_.size(); }
  bool is_identity() const { return terms_.empty(); }

  std::optional<Axis> axis_at(Qubit q) const;
  std::vector<Qubit> support() const;

  SignedPauli with_sign(Sign s) const;
  SignedPauli negated() const { return with_sign(flip(sign_)); }

  std::string str() const;

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;

 private:
  Sign sign_ = Sign::Plus;
  std::vector<Term> terms_;
};

struct PauliProduct {
  Phase phase = Phase::One;
  SignedPauli pauli;  // always carries Sign::Plus
};

/// p * q as an operator product. The input signs are folded into `phase`.
PauliProduct multiply(const SignedPauli& p, const SignedPauli& q);

bool commutes(const SignedPauli& p, const SignedPauli& q);

enum class RotationKind : std::uint8_t { Quarter, Eighth };

/// exp(i*pi/4*axis) for Quarter, exp(i*pi/8*axis) for Eighth. The axis sign
/// carries the sign of the angle.
struct Rotation {
  RotationKind kind = RotationKind::Quarter;
  SignedPauli axis;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Measuring a minus-signed axis and recording m is the same as measuring the
/// plus-signed axis and recording 1 - m.
struct PauliMeasurement {
  SignedPauli axis;
};

/// Moves `quarter` to the right of a later operation along `later`.
///
/// Returns the axis P'' with  op(later) . Q  ==  Q . op(P''), i.e.
/// P'' = exp(-i pi/4 P) later exp(+i pi/4 P). Commuting axes pass through
/// unchanged; anticommuting ones become the Hermitian form of -i * P * later.
SignedPauli push_right(const Rotation& quarter, const SignedPauli& later);

}  // namespace lapbc
