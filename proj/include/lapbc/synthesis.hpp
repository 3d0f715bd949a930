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

#include "lapbc/circuit.hpp"
#include "lapbc/random.hpp"

namespace lapbc {

/// Cost emulation of mixed-diagonal gate synthesis. Each RotateZ becomes
/// l random single-qubit eighth rotations and two random quarter rotations,
/// l ~ round(Normal(1.5 * log2(1/rho), length_stddev)) clamped at 0.
struct SynthesisParams {
  double rho = 1e-7;
  double length_stddev = 2.0;
  std::uint64_t seed = 0;

  void validate() const;
  /// log2(1/rho)
  double precision_bits() const;
  double mean_length() const { return 1.5 * precision_bits(); }
};

/// One draw of the synthesized eighth-rotation count.
int sample_synthesis_length(const SynthesisParams& params, Rng& rng);

Circuit synthesize(const Circuit& circuit, const SynthesisParams& params);

}  // namespace lapbc
