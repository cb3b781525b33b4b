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

#ifndef EQUIMAT_BIPARTITE_MATCHING_H_
#define EQUIMAT_BIPARTITE_MATCHING_H_

#include <vector>

namespace equimat {

struct BipartiteMatching {
  std::vector<int> left_match;   // right partner or -1
  std::vector<int> right_match;  // left partner or -1
  int size = 0;

  bool PerfectOnLeft() const {
    return size == static_cast<int>(left_match.size());
  }
};

// Maximum matching by augmenting paths (Kuhn). `adjacency[u]` lists the
// right neighbours of left vertex u; vertices are tried in index order so
// the result is deterministic.
BipartiteMatching MaximumBipartiteMatching(
    int num_left, int num_right,
    const std::vector<std::vector<int>>& adjacency);

}  // namespace equimat

#endif  // EQUIMAT_BIPARTITE_MATCHING_H_
