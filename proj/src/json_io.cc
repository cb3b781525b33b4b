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

#include "equimat/json_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "equimat/errors.h"

namespace equimat {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw MalformedInputError(what);
}

const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int AsInt(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) Malformed(what + " must be an integer");
  const auto x = value.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) Malformed(what + " is out of range");
  return static_cast<int>(x);
}

std::vector<int> AsIntArray(const Json& value, const std::string& what) {
  if (!value.is_array()) Malformed(what + " must be an array");
  std::vector<int> out;
  for (const Json& x : value) out.push_back(AsInt(x, what + " entry"));
  return out;
}

Rational AsRational(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return ParseRational(value.get<std::string>());
  Malformed("values must be integers or \"p/q\" strings");
}

template <typename Build>
std::shared_ptr<const Matroid> Guarded(Build build) {
  try {
    return build();
  } catch (const PreconditionError& e) {
    Malformed(std::string("invalid matroid: ") + e.what());
  }
}

}  // namespace

Json ParseJson(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Malformed(origin + ": " + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseJson(text.str(), path);
}

std::shared_ptr<const Matroid> MatroidFromJson(const Json& doc) {
  const Json& type = Field(doc, "type");
  if (!type.is_string()) Malformed("matroid type must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "graphic") {
    const int n = AsInt(Field(doc, "num_vertices"), "num_vertices");
    const Json& edges = Field(doc, "edges");
    if (!edges.is_array()) Malformed("edges must be an array");
    std::vector<GraphicMatroid::Edge> list;
    for (const Json& e : edges) {
      const std::vector<int> ends = AsIntArray(e, "edge");
      if (ends.size() != 2) Malformed("each edge needs two endpoints");
      list.emplace_back(ends[0], ends[1]);
    }
    return Guarded([&] {
      return std::make_shared<const GraphicMatroid>(n, std::move(list));
    });
  }
  if (kind == "uniform") {
    const int m = AsInt(Field(doc, "num_elements"), "num_elements");
    const int r = AsInt(Field(doc, "rank"), "rank");
    if (r > m) Malformed("uniform rank exceeds num_elements");
    return Guarded(
        [&] { return std::make_shared<const UniformMatroid>(m, r); });
  }
  if (kind == "partition") {
    const Json& blocks = Field(doc, "blocks");
    if (!blocks.is_array()) Malformed("blocks must be an array");
    std::vector<std::vector<ElementId>> list;
    for (const Json& b : blocks) list.push_back(AsIntArray(b, "block"));
    std::vector<int> caps = AsIntArray(Field(doc, "capacities"), "capacities");
    return Guarded([&] {
      return std::make_shared<const PartitionMatroid>(std::move(list),
                                                      std::move(caps));
    });
  }
  if (kind == "linear_gf2") {
    const Json& columns = Field(doc, "columns");
    if (!columns.is_array()) Malformed("columns must be an array");
    std::vector<std::string> bits;
    for (const Json& c : columns) {
      if (!c.is_string()) Malformed("each column must be a bit string");
      bits.push_back(c.get<std::string>());
    }
    if (doc.contains("num_elements") &&
        AsInt(doc.at("num_elements"), "num_elements") !=
            static_cast<int>(bits.size())) {
      Malformed("num_elements does not match the column count");
    }
    return Guarded([&] {
      return std::make_shared<const LinearGf2Matroid>(
          LinearGf2Matroid::FromBitStrings(bits));
    });
  }
  Malformed("unknown matroid type \"" + kind + "\"");
}

Json MatroidToJson(const Matroid& m) {
  Json doc;
  if (const auto* g = dynamic_cast<const GraphicMatroid*>(&m)) {
    doc["type"] = "graphic";
    doc["num_vertices"] = g->num_vertices();
    doc["edges"] = Json::array();
    for (auto [u, v] : g->edges()) doc["edges"].push_back({u, v});
  } else if (const auto* p = dynamic_cast<const PartitionMatroid*>(&m)) {
    doc["type"] = "partition";
    doc["blocks"] = p->blocks();
    doc["capacities"] = p->capacities();
  } else if (const auto* l = dynamic_cast<const LinearGf2Matroid*>(&m)) {
    doc["type"] = "linear_gf2";
    doc["num_elements"] = m.NumElements();
    doc["columns"] = Json::array();
    for (ElementId e = 0; e < m.NumElements(); ++e) {
      doc["columns"].push_back(l->ColumnString(e));
    }
  } else if (m.Kind() == MatroidKind::kUniform) {
    doc["type"] = "uniform";
    doc["num_elements"] = m.NumElements();
    doc["rank"] = m.Rank();
  } else {
    throw PreconditionError("matroid kind has no document form");
  }
  return doc;
}

ElementSet SetFromJson(const Json& doc, int num_elements) {
  const Json& list = doc.is_object() ? Field(doc, "elements") : doc;
  const std::vector<int> ids = AsIntArray(list, "set");
  std::set<int> seen;
  for (int id : ids) {
    if (id < 0 || id >= num_elements) {
      Malformed("set element " + std::to_string(id) + " outside [0, " +
                std::to_string(num_elements) + ")");
    }
    if (!seen.insert(id).second) {
      Malformed("set element " + std::to_string(id) + " repeated");
    }
  }
  return ElementSet(ids);
}

Json SetToJson(const ElementSet& s) { return Json(s.ids()); }

Json PartsToJson(const std::vector<ElementSet>& parts) {
  Json out = Json::array();
  for (const ElementSet& p : parts) out.push_back(SetToJson(p));
  return out;
}

FairDivisionInstance InstanceFromJson(const Json& doc) {
  FairDivisionInstance instance;
  instance.matroid = MatroidFromJson(Field(doc, "matroid"));
  const Json& agents = Field(doc, "agents");
  if (!agents.is_array() || agents.empty()) {
    Malformed("agents must be a non-empty array");
  }
  for (const Json& agent : agents) {
    const Json& values = Field(agent, "values");
    if (!values.is_array()) Malformed("agent values must be an array");
    std::vector<Rational> list;
    for (const Json& v : values) list.push_back(AsRational(v));
    if (static_cast<int>(list.size()) != instance.matroid->NumElements()) {
      Malformed("agent has " + std::to_string(list.size()) + " values for " +
                std::to_string(instance.matroid->NumElements()) + " goods");
    }
    instance.valuations.emplace_back(std::move(list));
  }
  return instance;
}

Json InstanceToJson(const FairDivisionInstance& instance) {
  Json doc;
  doc["matroid"] = MatroidToJson(*instance.matroid);
  doc["agents"] = Json::array();
  for (const Valuation& v : instance.valuations) {
    Json values = Json::array();
    for (const Rational& x : v.values()) values.push_back(FormatRational(x));
    doc["agents"].push_back({{"values", values}});
  }
  return doc;
}

}  // namespace equimat
