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

#include "equimat/fair_division.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>
#include <string>
#include <system_error>

#include "equimat/bipartite_matching.h"
#include "equimat/errors.h"
#include "equimat/exchange_graph.h"

namespace equimat {
namespace {

std::int64_t ParseInteger(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw MalformedInputError("not a rational number: \"" + whole + "\"");
  }
  return value;
}

std::int64_t FloorDiv(const Rational& q) {
  // boost::rational keeps the denominator positive.
  std::int64_t n = q.numerator();
  const std::int64_t d = q.denominator();
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Rational MaxValueIn(const Valuation& v, const ElementSet& bundle) {
  Rational best = v[bundle.front()];
  for (ElementId g : bundle) best = std::max(best, v[g]);
  return best;
}

void RequireGroundSize(const FairDivisionInstance& instance) {
  const Matroid& m = *instance.matroid;
  const int n = instance.num_agents();
  if (m.NumElements() != n * m.Rank()) {
    throw InfeasibleError("m = " + std::to_string(m.NumElements()) +
                          " is not n r = " + std::to_string(n) + " * " +
                          std::to_string(m.Rank()));
  }
}

Valuation Scaled(const Valuation& v, const Rational& shift,
                 const Rational& scale) {
  std::vector<Rational> values;
  values.reserve(v.size());
  for (const Rational& x : v.values()) values.push_back((x - shift) * scale);
  return Valuation(std::move(values));
}

ElementSet GoodsValued(const Valuation& v, const Rational& value) {
  std::vector<ElementId> goods;
  for (ElementId g = 0; g < v.size(); ++g) {
    if (v[g] == value) goods.push_back(g);
  }
  return ElementSet(std::move(goods));
}

using Profile = std::pair<int, int>;  // (high goods, mid goods)

std::vector<Profile> Profiles(const std::vector<ElementSet>& bundles,
                              const ElementSet& high, const ElementSet& mid) {
  std::vector<Profile> out;
  for (const ElementSet& b : bundles) {
    out.emplace_back(b.IntersectionSize(high), b.IntersectionSize(mid));
  }
  return out;
}

int CountProfiles(const std::vector<Profile>& profiles, Profile a, Profile b) {
  return static_cast<int>(
      std::count_if(profiles.begin(), profiles.end(),
                    [&](const Profile& p) { return p == a || p == b; }));
}

// Every profile in {(h-1,l+2), (h,l), (h,l+1), (h,l+2), (h+1,l)}.
bool FitsRepairedFamily(const std::vector<Profile>& profiles, Profile base) {
  const auto [h, l] = base;
  const Profile family[] = {
      {h - 1, l + 2}, {h, l}, {h, l + 1}, {h, l + 2}, {h + 1, l}};
  return std::all_of(profiles.begin(), profiles.end(), [&](const Profile& p) {
    return std::find(std::begin(family), std::end(family), p) !=
           std::end(family);
  });
}

}  // namespace

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(ParseInteger(text, text));
  const std::int64_t num =
      ParseInteger(std::string_view(text).substr(0, slash), text);
  const std::int64_t den =
      ParseInteger(std::string_view(text).substr(slash + 1), text);
  if (den == 0)
    throw MalformedInputError("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string FormatRational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational Valuation::Of(const ElementSet& bundle) const {
  Rational total(0);
  for (ElementId g : bundle) total += values_[g];
  return total;
}

std::vector<Rational> Valuation::DistinctValues() const {
  std::vector<Rational> distinct = values_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return distinct;
}

bool Valuation::IsBinary() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& x) {
    return x == Rational(0) || x == Rational(1);
  });
}

void FairDivisionInstance::Validate() const {
  if (!matroid) throw PreconditionError("instance has no matroid");
  if (valuations.empty()) throw PreconditionError("instance has no agents");
  for (const Valuation& v : valuations) {
    if (v.size() != matroid->NumElements()) {
      throw PreconditionError(
          "valuation length " + std::to_string(v.size()) +
          " does not match m = " + std::to_string(matroid->NumElements()));
    }
  }
}

NormalizedValuation NormalizeValuation(const Valuation& v) {
  if (v.size() == 0) return {v, Rational(0), Rational(1)};
  const std::vector<Rational> distinct = v.DistinctValues();
  const Rational shift = distinct.front();
  Rational scale(1);
  if (distinct.size() == 2) scale = Rational(1) / (distinct[1] - shift);
  return {Scaled(v, shift, scale), shift, scale};
}

Ef1Result CheckEf1(const FairDivisionInstance& instance,
                   const Allocation& allocation) {
  instance.Validate();
  const int n = instance.num_agents();
  if (static_cast<int>(allocation.bundles.size()) != n) {
    throw PreconditionError("allocation needs one bundle per agent");
  }
  ValidateBasisPartition(*instance.matroid, BasisPartition{allocation.bundles});
  Ef1Result result;
  for (int i = 0; i < n; ++i) {
    const Valuation& v = instance.valuations[i];
    const Rational own = v.Of(allocation.bundles[i]);
    for (int j = 0; j < n; ++j) {
      const ElementSet& other = allocation.bundles[j];
      if (i == j || other.empty()) continue;
      if (own < v.Of(other) - MaxValueIn(v, other)) {
        result.ef1 = false;
        result.violation = {i, j};
        return result;
      }
    }
  }
  return result;
}

Ef1Outcome AllocateEf1TriValued(const FairDivisionInstance& instance) {
  instance.Validate();
  const int n = instance.num_agents();
  const Valuation& v = instance.valuations.front();
  for (const Valuation& other : instance.valuations) {
    if (!(other == v)) {
      throw PreconditionError("tri-valued EF1 needs identical valuations");
    }
  }
  const std::vector<Rational> distinct = v.DistinctValues();
  if (distinct.size() > 3) {
    throw PreconditionError("valuation takes more than three values");
  }
  if (!distinct.empty() && distinct.front() < Rational(0)) {
    throw PreconditionError("EF1 path needs non-negative values");
  }
  RequireGroundSize(instance);
  const Matroid& matroid = *instance.matroid;

  // Shift onto {0, a, b}, 0 < a < b. With two values the non-zero class is H.
  const Valuation shifted =
      Scaled(v, distinct.empty() ? Rational(0) : distinct.front(), Rational(1));
  const std::vector<Rational> levels = shifted.DistinctValues();
  ElementSet high;
  ElementSet mid;
  if (levels.size() >= 2) high = GoodsValued(shifted, levels.back());
  if (levels.size() == 3) mid = GoodsValued(shifted, levels[1]);

  PartitionResult balanced = TwoSetEquitablePartition(matroid, n, high, mid);
  Ef1Outcome outcome;
  outcome.stats.partition = balanced.stats;
  Allocation& allocation = outcome.allocation;
  allocation.bundles = std::move(balanced.partition.parts);

  const FairDivisionInstance shifted_instance{
      instance.matroid, std::vector<Valuation>(n, shifted)};
  const ElementSet valued = high.Union(mid);
  std::optional<Profile> low_profile;
  int pattern_count = 0;
  while (true) {
    const Ef1Result check = CheckEf1(shifted_instance, allocation);
    if (check.ef1) break;
    const auto [i, j] = *check.violation;
    ElementSet& poor = allocation.bundles[i];
    ElementSet& rich = allocation.bundles[j];
    if (poor.IntersectionSize(high) != rich.IntersectionSize(high) ||
        poor.IntersectionSize(mid) + 2 != rich.IntersectionSize(mid)) {
      throw InternalInvariantError(
          "EF1-envy outside the (h,l) vs (h,l+2) profile pattern");
    }
    const Profile low{poor.IntersectionSize(high), poor.IntersectionSize(mid)};
    const Profile top{low.first, low.second + 2};
    if (!low_profile) {
      low_profile = low;
      pattern_count =
          CountProfiles(Profiles(allocation.bundles, high, mid), low, top);
    } else if (*low_profile != low) {
      throw InternalInvariantError("envy pattern moved to another profile");
    }
    // The envied bundle holds fewer zero-value goods, so it plays B1.
    const ElementSet zeros = poor.Union(rich).Minus(valued);
    const ExchangeSet x = FindTSExchangeable(matroid, rich, poor, zeros);
    std::tie(rich, poor) = ApplyExchange(rich, poor, x);
    ++outcome.stats.envy_repairs;
    ++outcome.stats.partition.exchanges;
    const int after =
        CountProfiles(Profiles(allocation.bundles, high, mid), low, top);
    if (after >= pattern_count) {
      throw InternalInvariantError("EF1 repair did not shrink the pattern");
    }
    pattern_count = after;
    if (outcome.stats.envy_repairs > n) {
      throw InternalInvariantError("EF1 repair loop exceeded n iterations");
    }
  }
  if (low_profile &&
      !FitsRepairedFamily(Profiles(allocation.bundles, high, mid),
                          *low_profile)) {
    throw InternalInvariantError("repaired profiles left the allowed family");
  }
  if (!CheckEf1(instance, allocation).ef1) {
    throw InternalInvariantError("shifted EF1 allocation is not EF1");
  }
  return outcome;
}

std::int64_t MmsValueBinary(const Valuation& v, int n, const Matroid& m) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (v.size() != m.NumElements()) {
    throw PreconditionError("valuation length does not match the matroid");
  }
  if (!v.IsBinary()) throw PreconditionError("valuation is not binary");
  if (m.NumElements() != n * m.Rank()) {
    throw InfeasibleError("m is not n r");
  }
  return FloorDiv(v.Of(ElementSet::Range(m.NumElements())) / Rational(n));
}

Rational MmsThresholdBiValued(const Valuation& v, int n, const Matroid& m) {
  if (v.DistinctValues().size() > 2) {
    throw PreconditionError("valuation takes more than two values");
  }
  const NormalizedValuation norm = NormalizeValuation(v);
  const Rational binary_share(MmsValueBinary(norm.values, n, m));
  return norm.shift * Rational(m.Rank()) + binary_share / norm.scale;
}

MmsOutcome AllocateMmsBiValued(const FairDivisionInstance& instance) {
  instance.Validate();
  const int n = instance.num_agents();
  const Matroid& matroid = *instance.matroid;
  RequireGroundSize(instance);

  std::vector<Valuation> binary;
  std::vector<std::int64_t> share;  // thresholds in binary units, fixed
  MmsOutcome outcome;
  for (const Valuation& v : instance.valuations) {
    if (v.DistinctValues().size() > 2) {
      throw PreconditionError("MMS path needs bi-valued valuations");
    }
    binary.push_back(NormalizeValuation(v).values);
    share.push_back(MmsValueBinary(binary.back(), n, matroid));
    outcome.stats.thresholds.push_back(MmsThresholdBiValued(v, n, matroid));
  }

  outcome.allocation.bundles.assign(n, {});
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i;
  std::vector<ElementSet> bundles =
      PartitionIntoKBases(matroid, n).partition.parts;

  while (!remaining.empty()) {
    ++outcome.stats.rounds;
    const int live = static_cast<int>(remaining.size());
    ElementSet rest;
    for (const ElementSet& b : bundles) rest = rest.Union(b);

    // Remaining items split into `live` bases and, for every remaining agent,
    // an equal split of them is still worth its original share.
    const RestrictedMatroid local(matroid, rest);
    BasisPartition local_parts;
    for (const ElementSet& b : bundles) {
      local_parts.parts.push_back(local.FromParent(b));
    }
    if (!IsBasisPartition(local, local_parts)) {
      throw InternalInvariantError("remaining bundles are not bases");
    }
    for (int agent : remaining) {
      const Rational left = binary[agent].Of(rest);
      if (FloorDiv(left / Rational(live)) < share[agent]) {
        throw InternalInvariantError("remaining share fell below threshold");
      }
    }

    const int divider = remaining.front();
    const ElementSet ones = local.FromParent(
        GoodsValued(binary[divider], Rational(1)).Intersect(rest));
    PartitionResult cut =
        EquitablePartitionFrom(local, std::move(local_parts), ones);
    bundles.clear();
    for (const ElementSet& part : cut.partition.parts) {
      bundles.push_back(local.ToParent(part));
    }

    std::vector<std::vector<int>> desires(live);
    for (int a = 0; a < live; ++a) {
      const int agent = remaining[a];
      for (int b = 0; b < live; ++b) {
        if (binary[agent].Of(bundles[b]) >= Rational(share[agent])) {
          desires[a].push_back(b);
        }
      }
    }
    if (static_cast<int>(desires[0].size()) != live) {
      throw InternalInvariantError("divider rejects one of its own bundles");
    }
    const BipartiteMatching matching =
        MaximumBipartiteMatching(live, live, desires);

    std::vector<char> assigned(live, 0);
    if (matching.size == live) {
      assigned.assign(live, 1);
    } else {
      // Alternating reachability from an unmatched bundle: every agent that
      // desires a reached bundle is matched, and the reached agents are
      // matched exactly to the reached bundles other than the start.
      std::vector<std::vector<int>> wanted_by(live);
      for (int a = 0; a < live; ++a) {
        for (int b : desires[a]) wanted_by[b].push_back(a);
      }
      int start = 0;
      while (matching.right_match[start] != -1) ++start;
      std::vector<char> reached(live, 0);
      std::deque<int> queue = {start};
      reached[start] = 1;
      while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        for (int a : wanted_by[b]) {
          if (matching.left_match[a] == -1) {
            throw InternalInvariantError("matching was not maximum");
          }
          assigned[a] = 1;
          const int next = matching.left_match[a];
          if (!reached[next]) {
            reached[next] = 1;
            queue.push_back(next);
          }
        }
      }
    }

    std::vector<int> still_remaining;
    std::vector<ElementSet> still_open;
    std::vector<char> bundle_taken(live, 0);
    std::vector<int> this_round;
    for (int a = 0; a < live; ++a) {
      const int agent = remaining[a];
      if (!assigned[a]) {
        still_remaining.push_back(agent);
        continue;
      }
      const int b = matching.left_match[a];
      bundle_taken[b] = 1;
      outcome.allocation.bundles[agent] = bundles[b];
      this_round.push_back(agent);
    }
    if (this_round.empty()) {
      throw InternalInvariantError("lone divider round assigned nobody");
    }
    for (int b = 0; b < live; ++b) {
      if (!bundle_taken[b]) still_open.push_back(bundles[b]);
    }
    for (int a = 0; a < live; ++a) {
      if (assigned[a]) continue;
      for (int b : desires[a]) {
        if (bundle_taken[b]) {
          throw InternalInvariantError("a removed bundle is still desired");
        }
      }
    }
    outcome.stats.assigned_per_round.push_back(std::move(this_round));
    remaining = std::move(still_remaining);
    bundles = std::move(still_open);
  }

  for (int i = 0; i < n; ++i) {
    const Rational value =
        instance.valuations[i].Of(outcome.allocation.bundles[i]);
    if (value < outcome.stats.thresholds[i]) {
      throw InternalInvariantError("agent " + std::to_string(i) +
                                   " is below its maximin share");
    }
  }
  return outcome;
}

Ef1Outcome CutAndChooseEf1TwoAgents(const FairDivisionInstance& instance) {
  instance.Validate();
  if (instance.num_agents() != 2) {
    throw PreconditionError("cut and choose needs exactly two agents");
  }
  const Valuation& cutter = instance.valuations[0];
  const Valuation& chooser = instance.valuations[1];
  Ef1Outcome outcome = AllocateEf1TriValued(
      FairDivisionInstance{instance.matroid, {cutter, cutter}});
  auto& bundles = outcome.allocation.bundles;
  if (chooser.Of(bundles[0]) > chooser.Of(bundles[1])) {
    std::swap(bundles[0], bundles[1]);
  }
  return outcome;
}

}  // namespace equimat
