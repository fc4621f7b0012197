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

#include <stdexcept>
#include <string>

namespace rqc {

// Base class for every precondition violation raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Duplicate or unknown qubit labels, register collisions.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Mismatched operator/state dimensions or register sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// State vectors that are not unit norm, density operators that are not
// Hermitian/unit-trace/positive, non-unitary control matrices.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// A forced measurement outcome whose Born probability is (near) zero.
class ImpossibleOutcomeError : public Error {
 public:
  using Error::Error;
};

// Malformed transcript text or a transcript that does not match the state
// it is replayed against.
class TranscriptError : public Error {
 public:
  using Error::Error;
};

}  // namespace rqc
