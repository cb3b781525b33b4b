// Copyright 2026 The Authors.
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

#ifndef EQUIMAT_ERRORS_H_
#define EQUIMAT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equimat {

// Base of every error raised by the library. The CLI maps each subclass to
// a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's contract (bad element id, non-basis input,
// overlapping sets, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input documents that cannot be parsed or do not follow the schema.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// The ground set cannot be split into the requested number of bases.
// `witness` is a set X with |X| > k * rank(X) when one is available.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what,
                           std::vector<int> witness = {})
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

// Exhaustive enumeration would exceed its configured caps.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A guarantee that the theory promises failed to hold. Always a bug or
// corrupted input that slipped past validation.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace equimat

#endif  // EQUIMAT_ERRORS_H_
