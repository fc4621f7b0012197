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

#include <initializer_list>
#include <string>
#include <vector>

namespace rqc {

using QubitLabel = std::string;

// Dense simulation only; the protocol needs at most 7 qubits at once.
inline constexpr int kMaxQubits = 12;

// An ordered list of distinct qubit labels. The first label is the most
// significant bit of every basis index.
class QubitRegister {
 public:
  QubitRegister() = default;
  QubitRegister(std::initializer_list<QubitLabel> labels);
  explicit QubitRegister(std::vector<QubitLabel> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t dim() const { return std::size_t{1} << labels_.size(); }
  const std::vector<QubitLabel>& labels() const { return labels_; }
  const QubitLabel& label(int position) const { return labels_[position]; }

  bool contains(const QubitLabel& q) const;
  // Position of q, 0 = most significant. Throws LabelError if absent.
  int position(const QubitLabel& q) const;
  // Positions for a list of pairwise-distinct labels, in the given order.
  std::vector<int> positions(const std::vector<QubitLabel>& qs) const;

  bool disjoint_from(const QubitRegister& other) const;
  // Concatenation; throws LabelError on collision or when exceeding kMaxQubits.
  QubitRegister joined(const QubitRegister& other) const;
  // This register minus the given labels, original order preserved.
  QubitRegister without(const std::vector<QubitLabel>& qs) const;

  bool operator==(const QubitRegister&) const = default;

 private:
  std::vector<QubitLabel> labels_;
};

}  // namespace rqc
