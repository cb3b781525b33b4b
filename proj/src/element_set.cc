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

#include "equimat/element_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

namespace equimat {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet ElementSet::Range(int m) {
  ElementSet out;
  out.ids_.resize(m > 0 ? m : 0);
  std::iota(out.ids_.begin(), out.ids_.end(), 0);
  return out;
}

ElementSet ElementSet::FromMask(std::span<const char> mask) {
  ElementSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.ids_.push_back(static_cast<ElementId>(i));
  }
  return out;
}

bool ElementSet::Contains(ElementId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

ElementSet ElementSet::With(ElementId e) const {
  ElementSet out = *this;
  auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), e);
  if (it == out.ids_.end() || *it != e) out.ids_.insert(it, e);
  return out;
}

ElementSet ElementSet::Without(ElementId e) const {
  ElementSet out = *this;
  auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), e);
  if (it != out.ids_.end() && *it == e) out.ids_.erase(it);
  return out;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

ElementSet ElementSet::Intersect(const ElementSet& other) const {
  ElementSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

ElementSet ElementSet::Minus(const ElementSet& other) const {
  ElementSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

ElementSet ElementSet::SymmetricDifference(const ElementSet& other) const {
  ElementSet out;
  std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                                other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

std::size_t ElementSet::IntersectionSize(const ElementSet& other) const {
  std::size_t count = 0;
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

bool ElementSet::IsDisjointFrom(const ElementSet& other) const {
  return IntersectionSize(other) == 0;
}

std::vector<char> ElementSet::ToMask(int m) const {
  std::vector<char> mask(m, 0);
  for (ElementId e : ids_) mask[e] = 1;
  return mask;
}

std::string ElementSet::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ElementSet& set) {
  os << '{';
  bool first = true;
  for (ElementId e : set) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

}  // namespace equimat
