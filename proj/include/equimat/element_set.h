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

#ifndef EQUIMAT_ELEMENT_SET_H_
#define EQUIMAT_ELEMENT_SET_H_

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace equimat {

// Elements of a ground set are dense ids in [0, m).
using ElementId = int;

// An immutable-by-convention finite set of element ids, stored sorted and
// duplicate free. All set algebra returns new sets.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  // Accepts ids in any order; duplicates are collapsed.
  explicit ElementSet(std::vector<ElementId> ids);

  // {0, 1, ..., m-1}.
  static ElementSet Range(int m);
  // Builds from a membership mask.
  static ElementSet FromMask(std::span<const char> mask);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool Contains(ElementId e) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  ElementId front() const { return ids_.front(); }
  ElementId back() const { return ids_.back(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<ElementId>& ids() const { return ids_; }

  ElementSet With(ElementId e) const;     // X + e
  ElementSet Without(ElementId e) const;  // X - e

  ElementSet Union(const ElementSet& other) const;
  ElementSet Intersect(const ElementSet& other) const;
  ElementSet Minus(const ElementSet& other) const;
  ElementSet SymmetricDifference(const ElementSet& other) const;

  // |X ∩ other| without materializing the intersection.
  std::size_t IntersectionSize(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;
  bool IsDisjointFrom(const ElementSet& other) const;

  // Membership mask of length m; every member must be < m.
  std::vector<char> ToMask(int m) const;

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<ElementId> ids_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& set);

}  // namespace equimat

#endif  // EQUIMAT_ELEMENT_SET_H_
