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

#ifndef UCPOL_VALUE_HPP
#define UCPOL_VALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace ucpol {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The six value domains attribute values live in.
enum class Kind { Text, Integer, Decimal, Boolean, Timestamp, Duration };

const char* kind_name(Kind k);

/// Seconds since the Unix epoch.
struct Timestamp {
  std::int64_t secs = 0;
  auto operator<=>(const Timestamp&) const = default;
};

/// A span of time in whole seconds. Never negative.
struct Duration {
  std::int64_t secs = 0;
  auto operator<=>(const Duration&) const = default;
};

// A single attribute value. Integer values are arbitrary precision and
// decimal values are exact rationals, so comparisons never go through
// floating point.
class SemanticValue {
 public:
  SemanticValue() : v_(std::string{}) {}
  explicit SemanticValue(std::string s) : v_(std::move(s)) {}
  explicit SemanticValue(Int i) : v_(std::move(i)) {}
  explicit SemanticValue(Rational r) : v_(std::move(r)) {}
  explicit SemanticValue(bool b) : v_(b) {}
  explicit SemanticValue(Timestamp t) : v_(t) {}
  explicit SemanticValue(Duration d);

  static SemanticValue text(std::string s) { return SemanticValue(std::move(s)); }
  static SemanticValue integer(long long i) { return SemanticValue(Int(i)); }
  static SemanticValue decimal(long long num, long long den) {
    return SemanticValue(Rational(num, den));
  }
  static SemanticValue boolean(bool b) { return SemanticValue(b); }
  static SemanticValue timestamp(std::int64_t t) { return SemanticValue(Timestamp{t}); }
  static SemanticValue duration(std::int64_t secs) { return SemanticValue(Duration{secs}); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }

  const std::string& as_text() const { return std::get<std::string>(v_); }
  const Int& as_int() const { return std::get<Int>(v_); }
  const Rational& as_decimal() const { return std::get<Rational>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  Timestamp as_timestamp() const { return std::get<Timestamp>(v_); }
  Duration as_duration() const { return std::get<Duration>(v_); }

  bool operator==(const SemanticValue& o) const { return v_ == o.v_; }

  // Total order within one kind; used both for predicate comparison on
  // ordered kinds and for canonical sorting of value sets. Comparing
  // values of different kinds is a programming error.
  std::strong_ordering order(const SemanticValue& o) const;
  bool less(const SemanticValue& o) const { return order(o) == std::strong_ordering::less; }

  /// Ordered kinds support <, <=, >, >= predicates.
  static bool is_ordered(Kind k) {
    return k == Kind::Integer || k == Kind::Decimal || k == Kind::Timestamp ||
           k == Kind::Duration;
  }
  /// Discrete ordered kinds have a successor function (used to normalize
  /// open interval bounds).
  static bool is_discrete(Kind k) {
    return k == Kind::Integer || k == Kind::Timestamp || k == Kind::Duration;
  }

  /// Successor/predecessor for discrete ordered kinds.
  SemanticValue succ() const;
  SemanticValue pred() const;

  /// Canonical literal form; round-trips through the parsers.
  std::string to_string() const;

 private:
  std::variant<std::string, Int, Rational, bool, Timestamp, Duration> v_;
};

/// Renders a duration using the largest unit that divides it exactly.
std::string format_duration(std::int64_t secs);

}  // namespace ucpol

#endif  // UCPOL_VALUE_HPP
