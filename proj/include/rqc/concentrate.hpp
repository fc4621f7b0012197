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

#include <optional>

#include "rqc/measure.hpp"
#include "rqc/states.hpp"
#include "rqc/transcript.hpp"

namespace rqc::concentrate {

// Remote information concentration: the three receivers Bell-measure their
// pairs (A,E), (B,F), (C,G), report the two-bit outcomes, and the controller
// applies the Pauli whose index is the XOR of the three, after which qubit D
// carries |chi> exactly. Every one of the 64 outcome triples occurs with
// probability 1/64.

struct OutcomeTriple {
  Bell ae = Bell::Phi0;  // Alice's outcome on (A, E)
  Bell bf = Bell::Phi0;  // Bob's outcome on (B, F)
  Bell cg = Bell::Phi0;  // Charlie's outcome on (C, G)

  int packed() const { return (index_of(ae) << 4) | (index_of(bf) << 2) | index_of(cg); }
  static OutcomeTriple from_packed(int p);
  bool operator==(const OutcomeTriple&) const = default;
};

// The four outcome sets of the joint-state decomposition, isomorphic to the
// Pauli index of the product sigma^l sigma^j sigma^k.
enum class OutcomeClass : int { I = 0, II = 1, III = 2, IV = 3 };

// Index of sigma^l sigma^j sigma^k up to global phase: XOR of the indices.
Pauli pauli_product_index(Pauli l, Pauli j, Pauli k);

OutcomeClass outcome_class(const OutcomeTriple& t);

struct ConcentrateResult {
  OutcomeTriple outcome;
  double probability = 0.0;     // joint Born probability of the triple
  DensityOperator d_state;      // post-correction reduced state of D
  std::vector<locc::Event> events;
};

// Runs the concentration stage on |psi>_ABC joined with rho_ub (registers
// must be disjoint; pairs are formed positionally: (psi[0], ub[1]),
// (psi[1], ub[2]), (psi[2], ub[3])). Outcomes are forced or sampled.
ConcentrateResult concentrate(const StateVector& psi_abc, const DensityOperator& rho_ub,
                              std::optional<OutcomeTriple> forced = std::nullopt,
                              OutcomeRng* rng = nullptr);

// Mixed-input overload; used by the resource-necessity probe, where the
// ancilla is replaced by a maximally mixed qubit.
ConcentrateResult concentrate(const DensityOperator& rho_abc, const DensityOperator& rho_ub,
                              std::optional<OutcomeTriple> forced = std::nullopt,
                              OutcomeRng* rng = nullptr);

struct ConcentrationRow {
  OutcomeTriple triple;
  OutcomeClass cls = OutcomeClass::I;
  double probability = 0.0;
  // Index m such that the pre-correction state of D is sigma^m |chi> up to
  // global phase (smallest such m if several match).
  int pre_correction_index = 0;
  double pre_correction_fidelity = 0.0;   // against sigma^class |chi>
  double post_correction_fidelity = 0.0;  // against |chi>
};

// Forces all 64 triples in order and tabulates class, probability and the
// pre/post-correction state of D. Branches are independent and run in
// parallel.
std::vector<ConcentrationRow> enumerate_concentration(const states::InputAmplitudes& amps);

}  // namespace rqc::concentrate
