// Copyright 2026 the ucpol authors
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

#ifndef UCPOL_RANGE_HPP
#define UCPOL_RANGE_HPP

#include <optional>
#include <vector>

#include "ucpol/value.hpp"

namespace ucpol {

// One contiguous piece of an ordered domain. An absent bound means the
// interval extends to -inf / +inf on that side.
struct Interval {
  std::optional<SemanticValue> lo;  // nullopt = -inf
  std::optional<SemanticValue> hi;  // nullopt = +inf
  bool lo_incl = true;
  bool hi_incl = true;

  bool operator==(const Interval&) const = default;
};

// A set of values of one kind. Ordered kinds hold a normalized union of
// disjoint intervals (sorted, non-empty, non-adjacent). Unordered kinds
// hold an explicit finite set plus a complemented flag, so the type is
// closed under complement even when the underlying domain is unbounded.
class ValueRange {
 public:
  ValueRange() : kind_(Kind::Text) {}

  static ValueRange empty(Kind k);
  static ValueRange full(Kind k);
  static ValueRange of_set(Kind k, std::vector<SemanticValue> values, bool complemented = false);
  static ValueRange of_interval(Kind k, Interval iv);
  static ValueRange of_intervals(Kind k, std::vector<Interval> ivs);
  static ValueRange singleton(const SemanticValue& v);

  Kind kind() const { return kind_; }
  bool is_empty() const;
  bool contains(const SemanticValue& v) const;

  bool is_set_based() const { return !SemanticValue::is_ordered(kind_); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<SemanticValue>& set_values() const { return set_; }
  bool complemented() const { return complemented_; }

  // Set algebra. Intersection, union and subset require equal kinds and
  // throw KindMismatchError otherwise. Complement is taken within the
  // given domain range (typically the vocabulary's declared domain).
  friend ValueRange range_intersect(const ValueRange& a, const ValueRange& b);
  friend ValueRange range_union(const ValueRange& a, const ValueRange& b);
  friend bool range_subset(const ValueRange& a, const ValueRange& b);
  ValueRange complement_within(const ValueRange& domain) const;

  /// Number of grid points that fall inside this range.
  std::size_t count_on(const std::vector<SemanticValue>& grid) const;

  bool operator==(const ValueRange& o) const;

  /// Whether a single scalar v describes this range exactly ({v} / [v,v]).
  std::optional<SemanticValue> as_singleton() const;

 private:
  /// Complement against the unbounded kind universe.
  ValueRange complement_unbounded() const;

  Kind kind_;
  std::vector<Interval> intervals_;   // ordered kinds
  std::vector<SemanticValue> set_;    // unordered kinds
  bool complemented_ = false;
};

}  // namespace ucpol

#endif  // UCPOL_RANGE_HPP
