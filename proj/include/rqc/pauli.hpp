// Copyright 2026 The rqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "rqc/kernels.hpp"

namespace rqc {

// Index conventions used throughout the protocol.
//
// Pauli operators: sigma^0 = I, sigma^1 = Z, sigma^2 = X, sigma^3 = ZX
// (proportional to Y). The index encodes (x_bit, z_bit) as i = 2x + z, so
// products compose by XOR of indices up to a global phase.
//
// Bell states: Phi^0 = (|00>+|11>)/sqrt2, Phi^1 = (|00>-|11>)/sqrt2,
// Phi^2 = (|01>+|10>)/sqrt2, Phi^3 = (|01>-|10>)/sqrt2. Under this pairing
// (I (x) sigma^i)|Phi^0> = |Phi^i> up to global phase.

enum class Pauli : int { I = 0, Z = 1, X = 2, ZX = 3 };
enum class Bell : int { Phi0 = 0, Phi1 = 1, Phi2 = 2, Phi3 = 3 };

inline int index_of(Pauli p) { return static_cast<int>(p); }
inline int index_of(Bell b) { return static_cast<int>(b); }

// Throw on out-of-range input; transcripts arrive from disk.
Pauli pauli_from_index(int i);
Bell bell_from_index(int i);

// The 2x2 matrix of sigma^i, row-major.
std::array<cx, 4> pauli_matrix2(Pauli p);

// Index of sigma^a sigma^b up to global phase (XOR of the bit encodings).
inline Pauli pauli_product(Pauli a, Pauli b) {
  return static_cast<Pauli>(index_of(a) ^ index_of(b));
}

// Amplitudes of |Phi^i> over |00>,|01>,|10>,|11>.
std::array<cx, 4> bell_amplitudes(Bell b);

}  // namespace rqc
