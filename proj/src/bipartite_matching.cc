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

#include "equimat/bipartite_matching.h"

#include <functional>

namespace equimat {

BipartiteMatching MaximumBipartiteMatching(
    int num_left, int num_right,
    const std::vector<std::vector<int>>& adjacency) {
  BipartiteMatching matching;
  matching.left_match.assign(num_left, -1);
  matching.right_match.assign(num_right, -1);
  std::vector<char> seen(num_right, 0);

  std::function<bool(int)> augment = [&](int u) {
    for (int v : adjacency[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (matching.right_match[v] == -1 || augment(matching.right_match[v])) {
        matching.left_match[u] = v;
        matching.right_match[v] = u;
        return true;
      }
    }
    return false;
  };

  for (int u = 0; u < num_left; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(u)) ++matching.size;
  }
  return matching;
}

}  // namespace equimat
