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

#include <algorithm>

#include "rqc/error.hpp"
#include "rqc/register.hpp"

namespace rqc {

namespace {

void check_labels(const std::vector<QubitLabel>& labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw DimensionError("register exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        throw LabelError("duplicate qubit label '" + labels[i] + "'");
      }
    }
  }
}

}  // namespace

QubitRegister::QubitRegister(std::initializer_list<QubitLabel> labels) : labels_(labels) {
  check_labels(labels_);
}

QubitRegister::QubitRegister(std::vector<QubitLabel> labels) : labels_(std::move(labels)) {
  check_labels(labels_);
}

bool QubitRegister::contains(const QubitLabel& q) const {
  return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

int QubitRegister::position(const QubitLabel& q) const {
  const auto it = std::find(labels_.begin(), labels_.end(), q);
  if (it == labels_.end()) throw LabelError("unknown qubit label '" + q + "'");
  return static_cast<int>(it - labels_.begin());
}

std::vector<int> QubitRegister::positions(const std::vector<QubitLabel>& qs) const {
  std::vector<int> out;
  out.reserve(qs.size());
  for (const auto& q : qs) out.push_back(position(q));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) throw LabelError("repeated target label '" + qs[i] + "'");
    }
  }
  return out;
}

bool QubitRegister::disjoint_from(const QubitRegister& other) const {
  return std::none_of(other.labels_.begin(), other.labels_.end(),
                      [this](const QubitLabel& q) { return contains(q); });
}

QubitRegister QubitRegister::joined(const QubitRegister& other) const {
  if (!disjoint_from(other)) throw LabelError("register labels collide");
  std::vector<QubitLabel> merged = labels_;
  merged.insert(merged.end(), other.labels_.begin(), other.labels_.end());
  return QubitRegister(std::move(merged));
}

QubitRegister QubitRegister::without(const std::vector<QubitLabel>& qs) const {
  for (const auto& q : qs) position(q);  // validate
  std::vector<QubitLabel> rest;
  rest.reserve(labels_.size());
  for (const auto& l : labels_) {
    if (std::find(qs.begin(), qs.end(), l) == qs.end()) rest.push_back(l);
  }
  return QubitRegister(std::move(rest));
}

}  // namespace rqc
