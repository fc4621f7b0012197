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

#include <cmath>

#include "rqc/error.hpp"
#include "rqc/pauli.hpp"

namespace rqc {

Pauli pauli_from_index(int i) {
  if (i < 0 || i > 3) throw Error("Pauli index out of range: " + std::to_string(i));
  return static_cast<Pauli>(i);
}

Bell bell_from_index(int i) {
  if (i < 0 || i > 3) throw Error("Bell index out of range: " + std::to_string(i));
  return static_cast<Bell>(i);
}

std::array<cx, 4> pauli_matrix2(Pauli p) {
  switch (p) {
    case Pauli::I:
      return {cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}};
    case Pauli::Z:
      return {cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{-1, 0}};
    case Pauli::X:
      return {cx{0, 0}, cx{1, 0}, cx{1, 0}, cx{0, 0}};
    case Pauli::ZX:
      return {cx{0, 0}, cx{1, 0}, cx{-1, 0}, cx{0, 0}};
  }
  throw Error("unreachable Pauli value");
}

std::array<cx, 4> bell_amplitudes(Bell b) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (b) {
    case Bell::Phi0:
      return {cx{s, 0}, cx{0, 0}, cx{0, 0}, cx{s, 0}};
    case Bell::Phi1:
      return {cx{s, 0}, cx{0, 0}, cx{0, 0}, cx{-s, 0}};
    case Bell::Phi2:
      return {cx{0, 0}, cx{s, 0}, cx{s, 0}, cx{0, 0}};
    case Bell::Phi3:
      return {cx{0, 0}, cx{s, 0}, cx{-s, 0}, cx{0, 0}};
  }
  throw Error("unreachable Bell value");
}

}  // namespace rqc
