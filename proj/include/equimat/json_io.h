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

// JSON documents for matroids, element sets and fair-division instances.
// Every parse failure surfaces as MalformedInputError.
//
//   {"type":"graphic","num_vertices":4,"edges":[[0,1],[1,2]]}
//   {"type":"uniform","num_elements":6,"rank":3}
//   {"type":"partition","blocks":[[0,1],[2,3]],"capacities":[1,1]}
//   {"type":"linear_gf2","num_elements":3,"columns":["10","01","11"]}
//
// Sets are a bare id array or {"elements":[...]}. Instances are
// {"matroid":{...},"agents":[{"values":["0","3/2",...]},...]}; values may
// also be plain JSON integers.

#ifndef EQUIMAT_JSON_IO_H_
#define EQUIMAT_JSON_IO_H_

#include <memory>
#include <string>
#include <vector>

#include "equimat/element_set.h"
#include "equimat/fair_division.h"
#include "equimat/matroid.h"
#include "json.hpp"

namespace equimat {

using Json = nlohmann::ordered_json;

Json ParseJson(const std::string& text, const std::string& origin);
Json ReadJsonFile(const std::string& path);

std::shared_ptr<const Matroid> MatroidFromJson(const Json& doc);
Json MatroidToJson(const Matroid& m);

ElementSet SetFromJson(const Json& doc, int num_elements);
Json SetToJson(const ElementSet& s);
Json PartsToJson(const std::vector<ElementSet>& parts);

FairDivisionInstance InstanceFromJson(const Json& doc);
Json InstanceToJson(const FairDivisionInstance& instance);

}  // namespace equimat

#endif  // EQUIMAT_JSON_IO_H_
