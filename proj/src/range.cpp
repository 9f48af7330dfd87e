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

#include "ucpol/range.hpp"

#include <algorithm>

#include "ucpol/errors.hpp"

namespace ucpol {

namespace {

bool value_less(const SemanticValue& a, const SemanticValue& b) { return a.less(b); }

// Compare two lower bounds; nullopt is -inf. Inclusive sorts before
// exclusive at the same value.
int cmp_lo(const Interval& a, const Interval& b) {
  if (!a.lo && !b.lo) return 0;
  if (!a.lo) return -1;
  if (!b.lo) return 1;
  auto o = a.lo->order(*b.lo);
  if (o != std::strong_ordering::equal) return o == std::strong_ordering::less ? -1 : 1;
  if (a.lo_incl == b.lo_incl) return 0;
  return a.lo_incl ? -1 : 1;
}

// True when the interval denotes no values at all.
bool interval_empty(const Interval& iv) {
  if (!iv.lo || !iv.hi) return false;
  auto o = iv.lo->order(*iv.hi);
  if (o == std::strong_ordering::greater) return true;
  if (o == std::strong_ordering::equal) return !(iv.lo_incl && iv.hi_incl);
  // Open integer-like gap such as (3,4) contains nothing.
  if (!iv.lo_incl && !iv.hi_incl && SemanticValue::is_discrete(iv.lo->kind()))
    return iv.lo->succ().order(*iv.hi) == std::strong_ordering::equal;
  return false;
}

// Canonicalize one interval of a discrete kind to closed bounds.
Interval close_discrete(Interval iv, Kind k) {
  if (!SemanticValue::is_discrete(k)) return iv;
  if (iv.lo && !iv.lo_incl) {
    iv.lo = iv.lo->succ();
    iv.lo_incl = true;
  }
  if (iv.hi && !iv.hi_incl) {
    iv.hi = iv.hi->pred();
    iv.hi_incl = true;
  }
  // Durations never extend below zero.
  if (k == Kind::Duration) {
    SemanticValue zero = SemanticValue::duration(0);
    if (!iv.lo || iv.lo->less(zero)) {
      iv.lo = zero;
      iv.lo_incl = true;
    }
  }
  return iv;
}

// Can the union of two intervals (a before-or-at b) be one interval?
bool connects(const Interval& a, const Interval& b, Kind k) {
  if (!a.hi || !b.lo) return true;
  auto o = b.lo->order(*a.hi);
  if (o == std::strong_ordering::less) return true;
  if (o == std::strong_ordering::equal) return a.hi_incl || b.lo_incl;
  if (SemanticValue::is_discrete(k) && a.hi_incl && b.lo_incl)
    return a.hi->succ().order(*b.lo) != std::strong_ordering::less;
  return false;
}

std::vector<Interval> normalize_intervals(std::vector<Interval> ivs, Kind k) {
  std::vector<Interval> in;
  for (auto& iv : ivs) {
    Interval c = close_discrete(std::move(iv), k);
    if (!interval_empty(c)) in.push_back(std::move(c));
  }
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
    return cmp_lo(a, b) < 0;
  });
  std::vector<Interval> out;
  for (auto& iv : in) {
    if (!out.empty() && connects(out.back(), iv, k)) {
      Interval& last = out.back();
      if (!last.hi) continue;
      if (!iv.hi) {
        last.hi.reset();
        last.hi_incl = true;
        continue;
      }
      auto o = iv.hi->order(*last.hi);
      if (o == std::strong_ordering::greater) {
        last.hi = iv.hi;
        last.hi_incl = iv.hi_incl;
      } else if (o == std::strong_ordering::equal) {
        last.hi_incl = last.hi_incl || iv.hi_incl;
      }
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

Interval intersect_one(const Interval& a, const Interval& b) {
  Interval r;
  // max of lower bounds
  if (cmp_lo(a, b) >= 0) {
    r.lo = a.lo;
    r.lo_incl = a.lo_incl;
  } else {
    r.lo = b.lo;
    r.lo_incl = b.lo_incl;
  }
  if (a.lo && b.lo && a.lo->order(*b.lo) == std::strong_ordering::equal)
    r.lo_incl = a.lo_incl && b.lo_incl;
  // min of upper bounds
  auto hi_le = [](const Interval& x, const Interval& y) {
    if (!x.hi) return false;
    if (!y.hi) return true;
    auto o = x.hi->order(*y.hi);
    if (o != std::strong_ordering::equal) return o == std::strong_ordering::less;
    return true;
  };
  if (hi_le(a, b)) {
    r.hi = a.hi;
    r.hi_incl = a.hi_incl;
  } else {
    r.hi = b.hi;
    r.hi_incl = b.hi_incl;
  }
  if (a.hi && b.hi && a.hi->order(*b.hi) == std::strong_ordering::equal)
    r.hi_incl = a.hi_incl && b.hi_incl;
  return r;
}

void require_same_kind(const ValueRange& a, const ValueRange& b) {
  if (a.kind() != b.kind())
    throw KindMismatchError(std::string("range kinds differ: ") + kind_name(a.kind()) +
                            " vs " + kind_name(b.kind()));
}

std::vector<SemanticValue> sorted_unique(std::vector<SemanticValue> vs) {
  std::sort(vs.begin(), vs.end(), value_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<SemanticValue> set_minus(const std::vector<SemanticValue>& a,
                                     const std::vector<SemanticValue>& b) {
  std::vector<SemanticValue> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      value_less);
  return out;
}

std::vector<SemanticValue> set_and(const std::vector<SemanticValue>& a,
                                   const std::vector<SemanticValue>& b) {
  std::vector<SemanticValue> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        value_less);
  return out;
}

std::vector<SemanticValue> set_or(const std::vector<SemanticValue>& a,
                                  const std::vector<SemanticValue>& b) {
  std::vector<SemanticValue> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 value_less);
  return out;
}

}  // namespace

ValueRange ValueRange::empty(Kind k) {
  ValueRange r;
  r.kind_ = k;
  return r;
}

ValueRange ValueRange::full(Kind k) {
  ValueRange r;
  r.kind_ = k;
  if (SemanticValue::is_ordered(k)) {
    r.intervals_ = normalize_intervals({Interval{}}, k);
  } else if (k == Kind::Boolean) {
    r.set_ = {SemanticValue::boolean(false), SemanticValue::boolean(true)};
  } else {
    r.complemented_ = true;  // complement of the empty set = everything
  }
  return r;
}

ValueRange ValueRange::of_set(Kind k, std::vector<SemanticValue> values, bool complemented) {
  ValueRange r;
  r.kind_ = k;
  if (SemanticValue::is_ordered(k)) {
    // A scalar set over an ordered kind becomes point intervals.
    std::vector<Interval> ivs;
    for (auto& v : values) ivs.push_back(Interval{v, v, true, true});
    r.intervals_ = normalize_intervals(std::move(ivs), k);
    if (complemented) return r.complement_unbounded();
    return r;
  }
  r.set_ = sorted_unique(std::move(values));
  r.complemented_ = complemented;
  if (k == Kind::Boolean && complemented) {
    // The boolean universe is known, so complements normalize away.
    r.set_ = set_minus(full(Kind::Boolean).set_, r.set_);
    r.complemented_ = false;
  }
  return r;
}

ValueRange ValueRange::of_interval(Kind k, Interval iv) {
  return of_intervals(k, {std::move(iv)});
}

ValueRange ValueRange::of_intervals(Kind k, std::vector<Interval> ivs) {
  if (!SemanticValue::is_ordered(k))
    throw KindMismatchError(std::string("intervals require an ordered kind, got ") +
                            kind_name(k));
  ValueRange r;
  r.kind_ = k;
  r.intervals_ = normalize_intervals(std::move(ivs), k);
  return r;
}

ValueRange ValueRange::singleton(const SemanticValue& v) {
  if (SemanticValue::is_ordered(v.kind()))
    return of_interval(v.kind(), Interval{v, v, true, true});
  return of_set(v.kind(), {v});
}

bool ValueRange::is_empty() const {
  if (is_set_based()) return !complemented_ && set_.empty();
  return intervals_.empty();
}

bool ValueRange::contains(const SemanticValue& v) const {
  if (v.kind() != kind_) return false;
  if (is_set_based()) {
    bool in = std::binary_search(set_.begin(), set_.end(), v, value_less);
    return complemented_ ? !in : in;
  }
  for (const auto& iv : intervals_) {
    if (iv.lo) {
      auto o = v.order(*iv.lo);
      if (o == std::strong_ordering::less) continue;
      if (o == std::strong_ordering::equal && !iv.lo_incl) continue;
    }
    if (iv.hi) {
      auto o = v.order(*iv.hi);
      if (o == std::strong_ordering::greater) continue;
      if (o == std::strong_ordering::equal && !iv.hi_incl) continue;
    }
    return true;
  }
  return false;
}

ValueRange ValueRange::complement_unbounded() const {
  ValueRange r;
  r.kind_ = kind_;
  if (is_set_based()) {
    if (kind_ == Kind::Boolean) {
      r.set_ = set_minus(full(Kind::Boolean).set_, set_);
      return r;
    }
    r.set_ = set_;
    r.complemented_ = !complemented_;
    return r;
  }
  // Walk the gaps between sorted disjoint intervals.
  std::vector<Interval> out;
  std::optional<SemanticValue> cur_lo;  // -inf
  bool cur_incl = true;
  for (const auto& iv : intervals_) {
    if (iv.lo) {
      Interval gap;
      gap.lo = cur_lo;
      gap.lo_incl = cur_incl;
      gap.hi = iv.lo;
      gap.hi_incl = !iv.lo_incl;
      out.push_back(std::move(gap));
    }
    if (!iv.hi) {
      r.intervals_ = normalize_intervals(std::move(out), kind_);
      return r;
    }
    cur_lo = iv.hi;
    cur_incl = !iv.hi_incl;
  }
  out.push_back(Interval{cur_lo, std::nullopt, cur_incl, true});
  if (intervals_.empty()) out = {Interval{}};
  r.intervals_ = normalize_intervals(std::move(out), kind_);
  return r;
}

ValueRange ValueRange::complement_within(const ValueRange& domain) const {
  require_same_kind(*this, domain);
  return range_intersect(complement_unbounded(), domain);
}

ValueRange range_intersect(const ValueRange& a, const ValueRange& b) {
  require_same_kind(a, b);
  ValueRange r;
  r.kind_ = a.kind_;
  if (a.is_set_based()) {
    if (!a.complemented_ && !b.complemented_) {
      r.set_ = set_and(a.set_, b.set_);
    } else if (!a.complemented_ && b.complemented_) {
      r.set_ = set_minus(a.set_, b.set_);
    } else if (a.complemented_ && !b.complemented_) {
      r.set_ = set_minus(b.set_, a.set_);
    } else {
      r.set_ = set_or(a.set_, b.set_);
      r.complemented_ = true;
    }
    return r;
  }
  std::vector<Interval> out;
  for (const auto& ia : a.intervals_)
    for (const auto& ib : b.intervals_) {
      Interval iv = intersect_one(ia, ib);
      if (!interval_empty(iv)) out.push_back(std::move(iv));
    }
  r.intervals_ = normalize_intervals(std::move(out), a.kind_);
  return r;
}

ValueRange range_union(const ValueRange& a, const ValueRange& b) {
  require_same_kind(a, b);
  if (a.is_set_based()) {
    ValueRange r;
    r.kind_ = a.kind_;
    if (!a.complemented_ && !b.complemented_) {
      r.set_ = set_or(a.set_, b.set_);
    } else if (a.complemented_ && b.complemented_) {
      r.set_ = set_and(a.set_, b.set_);
      r.complemented_ = true;
    } else {
      // finite u cofinite = cofinite
      const ValueRange& fin = a.complemented_ ? b : a;
      const ValueRange& cof = a.complemented_ ? a : b;
      r.set_ = set_minus(cof.set_, fin.set_);
      r.complemented_ = true;
    }
    return r;
  }
  ValueRange r;
  r.kind_ = a.kind_;
  std::vector<Interval> out = a.intervals_;
  out.insert(out.end(), b.intervals_.begin(), b.intervals_.end());
  r.intervals_ = normalize_intervals(std::move(out), a.kind_);
  return r;
}

bool range_subset(const ValueRange& a, const ValueRange& b) {
  require_same_kind(a, b);
  return range_intersect(a, b.complement_unbounded()).is_empty();
}

std::size_t ValueRange::count_on(const std::vector<SemanticValue>& grid) const {
  std::size_t n = 0;
  for (const auto& v : grid)
    if (contains(v)) ++n;
  return n;
}

bool ValueRange::operator==(const ValueRange& o) const {
  return kind_ == o.kind_ && intervals_ == o.intervals_ && set_ == o.set_ &&
         complemented_ == o.complemented_;
}

std::optional<SemanticValue> ValueRange::as_singleton() const {
  if (is_set_based()) {
    if (!complemented_ && set_.size() == 1) return set_[0];
    return std::nullopt;
  }
  if (intervals_.size() == 1) {
    const Interval& iv = intervals_[0];
    if (iv.lo && iv.hi && iv.lo_incl && iv.hi_incl &&
        iv.lo->order(*iv.hi) == std::strong_ordering::equal)
      return *iv.lo;
  }
  return std::nullopt;
}

}  // namespace ucpol
