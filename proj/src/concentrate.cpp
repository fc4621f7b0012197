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

#include "rqc/concentrate.hpp"

#include "rqc/error.hpp"

namespace rqc::concentrate {

using locc::Event;
using locc::LocalOp;
using locc::Measurement;
using locc::Message;
using locc::PartyId;

OutcomeTriple OutcomeTriple::from_packed(int p) {
  if (p < 0 || p > 63) throw Error("packed outcome triple out of range");
  return OutcomeTriple{bell_from_index((p >> 4) & 3), bell_from_index((p >> 2) & 3),
                       bell_from_index(p & 3)};
}

Pauli pauli_product_index(Pauli l, Pauli j, Pauli k) {
  return pauli_product(pauli_product(l, j), k);
}

OutcomeClass outcome_class(const OutcomeTriple& t) {
  const Pauli p = pauli_product_index(pauli_from_index(index_of(t.ae)),
                                      pauli_from_index(index_of(t.bf)),
                                      pauli_from_index(index_of(t.cg)));
  return static_cast<OutcomeClass>(index_of(p));
}

namespace {

struct StagePlan {
  std::array<QubitPair, 3> pairs;
  QubitLabel d;
};

StagePlan plan_for(const QubitRegister& psi_reg, const QubitRegister& ub_reg) {
  if (psi_reg.size() != 3) throw DimensionError("concentration input must be three qubits");
  if (ub_reg.size() != 4) throw DimensionError("concentration resource must be four qubits");
  if (!psi_reg.disjoint_from(ub_reg)) throw LabelError("input and resource registers collide");
  return StagePlan{{QubitPair{psi_reg.label(0), ub_reg.label(1)},
                    QubitPair{psi_reg.label(1), ub_reg.label(2)},
                    QubitPair{psi_reg.label(2), ub_reg.label(3)}},
                   ub_reg.label(0)};
}

constexpr std::array<PartyId, 3> kMeasuringParties = {PartyId::alice, PartyId::bob,
                                                      PartyId::charlie};

// Three Bell measurements without the final correction. Returns the
// unnormalized walk as (outcome triple, joint probability, state of D).
struct Uncorrected {
  OutcomeTriple outcome;
  double probability = 1.0;
  DensityOperator d_state;
  std::vector<Event> events;
};

Uncorrected measure_stage(const DensityOperator& joint, const StagePlan& plan,
                          std::optional<OutcomeTriple> forced, OutcomeRng* rng) {
  std::array<std::optional<Bell>, 3> want{};
  if (forced.has_value()) want = {forced->ae, forced->bf, forced->cg};

  Uncorrected out{OutcomeTriple{}, 1.0, DensityOperator::maximally_mixed({plan.d}), {}};
  DensityOperator current = joint;
  std::array<Bell, 3> got{};
  for (int i = 0; i < 3; ++i) {
    BellMeasurement m = bell_measure(current, plan.pairs[i], want[i], rng);
    got[i] = m.outcome;
    out.probability *= m.probability;
    out.events.push_back(Event{static_cast<int>(out.events.size()),
                               Measurement{kMeasuringParties[i], plan.pairs[i].first,
                                           plan.pairs[i].second, index_of(m.outcome),
                                           m.probability}});
    out.events.push_back(Event{static_cast<int>(out.events.size()),
                               Message{kMeasuringParties[i], PartyId::controller,
                                       index_of(m.outcome)}});
    current = std::move(m.post);
  }
  out.outcome = OutcomeTriple{got[0], got[1], got[2]};
  out.d_state = std::move(current);
  return out;
}

ConcentrateResult finish(Uncorrected stage, const QubitLabel& d) {
  const OutcomeClass cls = outcome_class(stage.outcome);
  const Pauli correction = pauli_from_index(static_cast<int>(cls));
  DensityOperator corrected =
      apply(stage.d_state, Operator::single_qubit(pauli_matrix2(correction)), {d});
  LocalOp op;
  op.party = PartyId::controller;
  op.op = "correct:" + std::to_string(index_of(correction));
  op.targets = {d};
  op.uses = {1, 3, 5};  // the three report messages within this fragment
  stage.events.push_back(Event{static_cast<int>(stage.events.size()), std::move(op)});
  return ConcentrateResult{stage.outcome, stage.probability, std::move(corrected),
                           std::move(stage.events)};
}

}  // namespace

ConcentrateResult concentrate(const StateVector& psi_abc, const DensityOperator& rho_ub,
                              std::optional<OutcomeTriple> forced, OutcomeRng* rng) {
  return concentrate(promote(psi_abc), rho_ub, forced, rng);
}

ConcentrateResult concentrate(const DensityOperator& rho_abc, const DensityOperator& rho_ub,
                              std::optional<OutcomeTriple> forced, OutcomeRng* rng) {
  const StagePlan plan = plan_for(rho_abc.reg(), rho_ub.reg());
  const DensityOperator joint = kron(rho_abc, rho_ub);
  return finish(measure_stage(joint, plan, forced, rng), plan.d);
}

std::vector<ConcentrationRow> enumerate_concentration(const states::InputAmplitudes& amps) {
  const StateVector psi = states::telecloned_input(amps);
  const DensityOperator rho_ub = states::smolin();
  const StagePlan plan = plan_for(psi.reg(), rho_ub.reg());
  const DensityOperator joint = kron(promote(psi), rho_ub);
  const StateVector chi = amps.chi(plan.d);

  std::vector<ConcentrationRow> rows(64);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < 64; ++p) {
    const OutcomeTriple triple = OutcomeTriple::from_packed(p);
    Uncorrected stage = measure_stage(joint, plan, triple, nullptr);

    ConcentrationRow row;
    row.triple = triple;
    row.cls = outcome_class(triple);
    row.probability = stage.probability;

    // Which sigma^m |chi> the uncorrected D state matches, up to phase.
    row.pre_correction_index = -1;
    for (int m = 0; m < 4; ++m) {
      const StateVector ref = apply(chi, Operator::single_qubit(pauli_matrix2(pauli_from_index(m))),
                                    {plan.d});
      const double f = fidelity(stage.d_state, ref);
      if (m == static_cast<int>(row.cls)) row.pre_correction_fidelity = f;
      if (row.pre_correction_index < 0 && f >= 1.0 - 1e-9) row.pre_correction_index = m;
    }

    const Pauli correction = pauli_from_index(static_cast<int>(row.cls));
    const DensityOperator corrected =
        apply(stage.d_state, Operator::single_qubit(pauli_matrix2(correction)), {plan.d});
    row.post_correction_fidelity = fidelity(corrected, chi);
    rows[p] = row;
  }
  return rows;
}

}  // namespace rqc::concentrate
