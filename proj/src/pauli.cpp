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

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lapbc {

char axis_char(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    case Axis::Z:
      return 'Z';
  }
  return '?';
}

Axis parse_axis(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'X':
      return Axis::X;
    case 'Y':
      return Axis::Y;
    case 'Z':
      return Axis::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli axis: '") + c + "'");
  }
}

SignedPauli::SignedPauli(Sign sign, std::vector<Term> terms) : sign_(sign), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].first == terms_[i - 1].first) {
      throw std::invalid_argument("qubit " + std::to_string(terms_[i].first) + " appears twice in a Pauli string");
    }
  }
}

SignedPauli SignedPauli::single(Axis axis, Qubit q, Sign sign) { return SignedPauli(sign, {{q, axis}}); }

SignedPauli SignedPauli::parse(std::string_view text) {
  if (text.empty() || (text[0] != '+' && text[0] != '-')) {
    throw std::invalid_argument("Pauli string must start with '+' or '-': '" + std::string(text) + "'");
  }
  Sign sign = text[0] == '+' ? Sign::Plus : Sign::Minus;
  std::string_view rest = text.substr(1);
  if (rest == "I") {
    return SignedPauli(sign, {});
  }
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < rest.size()) {
    Axis a = parse_axis(rest[i++]);
    std::size_t start = i;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
      ++i;
    }
    if (start == i) {
      throw std::invalid_argument("missing qubit index in Pauli string '" + std::string(text) + "'");
    }
    terms.emplace_back(static_cast<Qubit>(std::stoul(std::string(rest.substr(start, i - start)))), a);
  }
  if (terms.empty()) {
    throw std::invalid_argument("empty Pauli string '" + std::string(text) + "'");
  }
  return SignedPauli(sign, std::move(terms));
}

std::optional<Axis> SignedPauli::axis_at(Qubit q) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), q,
                             [](const Term& t, Qubit v) { return t.first < v; });
  if (it != terms_.end() && it->first == q) {
    return it->second;
  }
  return std::nullopt;
}

std::vector<Qubit> SignedPauli::support() const {
  std::vector<Qubit> out;
  out.reserve(terms_.size());
  for (const auto& [q, a] : terms_) {
    out.push_back(q);
  }
  return out;
}

SignedPauli SignedPauli::with_sign(Sign s) const {
  SignedPauli r = *this;
  r.sign_ = s;
  return r;
}

std::string SignedPauli::str() const {
  std::string out(1, sign_ == Sign::Plus ? '+' : '-');
  if (terms_.empty()) {
    return out + "I";
  }
  for (const auto& [q, a] : terms_) {
    out += axis_char(a);
    out += std::to_string(q);
  }
  return out;
}

namespace {

// a*b for single-qubit axes, as (exponent of i, result). Equal axes give
// the identity, signalled by nullopt.
std::pair<int, std::optional<Axis>> single_product(Axis a, Axis b) {
  if (a == b) {
    return {0, std::nullopt};
  }
  // Cyclic X -> Y -> Z -> X gives +i, anticyclic gives -i.
  int ia = static_cast<int>(a);
  int ib = static_cast<int>(b);
  Axis third = static_cast<Axis>(3 - ia - ib);
  bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? 1 : 3, third};
}

}  // namespace

PauliProduct multiply(const SignedPauli& p, const SignedPauli& q) {
  int k = 0;
  if (p.sign() == Sign::Minus) k += 2;
  if (q.sign() == Sign::Minus) k += 2;
  std::vector<SignedPauli::Term> out;
  auto a = p.terms();
  auto b = q.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      auto [phase, axis] = single_product(a[i].second, b[j].second);
      k += phase;
      if (axis) {
        out.emplace_back(a[i].first, *axis);
      }
      ++i;
      ++j;
    }
  }
  return PauliProduct{static_cast<Phase>(k % 4), SignedPauli(Sign::Plus, std::move(out))};
}

bool commutes(const SignedPauli& p, const SignedPauli& q) {
  auto a = p.terms();
  auto b = q.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  bool anti = false;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      anti ^= a[i].second != b[j].second;
      ++i;
      ++j;
    }
  }
  return !anti;
}

SignedPauli push_right(const Rotation& quarter, const SignedPauli& later) {
  if (quarter.kind != RotationKind::Quarter) {
    throw std::invalid_argument("push_right needs a quarter rotation");
  }
  if (commutes(quarter.axis, later)) {
    return later;
  }
  auto prod = multiply(quarter.axis, later);
  // Anticommuting factors give phase +-i; multiplying by -i leaves +-1.
  int k = (static_cast<int>(prod.phase) + 3) % 4;
  return prod.pauli.with_sign(k == 0 ? Sign::Plus : Sign::Minus);
}

}  // namespace lapbc
