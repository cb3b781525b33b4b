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

// The end-to-end checks behind `equimat verify` and the acceptance test.
// Criteria 1-8 compare the algorithms against brute force on the
// small-instance catalog; criterion 9 measures the large graphic case.

#ifndef EQUIMAT_VERIFY_SUITE_H_
#define EQUIMAT_VERIFY_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace equimat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::int64_t runs = 0;
  std::int64_t failures = 0;
  std::string detail;  // first failure, or a summary line
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20261014;
};

inline constexpr int kNumCriteria = 9;

// Criterion `id` in 1..9. Exceptions raised by the algorithms count as
// failures and are reported in `detail`.
CriterionResult RunCriterion(int id, const VerifyOptions& options = {});

std::vector<CriterionResult> RunCriteria(const std::vector<int>& ids,
                                         const VerifyOptions& options = {});

// Least-squares slope of log(y) against log(x).
double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace equimat

#endif  // EQUIMAT_VERIFY_SUITE_H_
