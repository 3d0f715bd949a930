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

#include "lapbc/synthesis.hpp"

#include <cmath>
#include <stdexcept>

namespace lapbc {

void SynthesisParams::validate() const {
  if (!(rho > 0 && rho < 1)) throw std::invalid_argument("rho must lie in (0, 1)");
  if (!(length_stddev >= 0)) throw std::invalid_argument("length_stddev must be non-negative");
}

double SynthesisParams::precision_bits() const { return std::log2(1.0 / rho); }

int sample_synthesis_length(const SynthesisParams& params, Rng& rng) {
  double x = params.mean_length();
  if (params.length_stddev > 0) {
    std::normal_distribution<double> normal(x, params.length_stddev);
    x = normal(rng);
  }
  return std::max(0, static_cast<int>(std::lround(x)));
}

Circuit synthesize(const Circuit& circuit, const SynthesisParams& params) {
  params.validate();
  Rng rng(params.seed);
  auto random_axis = [&rng]() {
    auto k = uniform_below(rng, 6);
    return std::pair{static_cast<Axis>(k % 3), k < 3 ? Sign::Plus : Sign::Minus};
  };
  Circuit out;
  out.qubit_count = circuit.qubit_count;
  out.instructions.reserve(circuit.instructions.size());
  for (const auto& inst : circuit.instructions) {
    if (inst.op != IrOp::RotateZ) {
      out.instructions.push_back(inst);
      continue;
    }
    int length = sample_synthesis_length(params, rng);
    for (int i = 0; i < length; ++i) {
      auto [a, s] = random_axis();
      out.instructions.push_back(IrInstruction::eighth(inst.q0, a, s));
    }
    for (int i = 0; i < 2; ++i) {
      auto [a, s] = random_axis();
      out.instructions.push_back(IrInstruction::quarter(inst.q0, a, s));
    }
  }
  return out;
}

}  // namespace lapbc
