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
#include "lapbc/isa.hpp"

namespace lapbc {

/// Sequential Pauli-based computation: every Clifford is expanded into
/// quarter rotations and pushed past the rest of the program, then dropped.
/// Output holds only inits, eighth rotations and measurements.
IsaProgram spc_transpile(const Circuit& circuit);

/// Locality-aware variant: only single-qubit quarter rotations are pushed
/// to the end. Two-qubit quarters stay in place, so every instruction keeps
/// the support of the gate it came from.
IsaProgram lapbc_transpile(const Circuit& circuit);

/// Sequential cycle count of an SPC program: d for the initialization epoch
/// (if any init), d per eighth rotation, multi-qubit measurement and Y
/// measurement; single-qubit X/Z measurements are free.
std::int64_t spc_cost(const IsaProgram& program, int d);

}  // namespace lapbc
