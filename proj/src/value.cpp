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

#include "ucpol/value.hpp"

#include <stdexcept>

namespace ucpol {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Text: return "text";
    case Kind::Integer: return "integer";
    case Kind::Decimal: return "decimal";
    case Kind::Boolean: return "boolean";
    case Kind::Timestamp: return "timestamp";
    case Kind::Duration: return "duration";
  }
  return "?";
}

SemanticValue::SemanticValue(Duration d) : v_(d) {
  if (d.secs < 0) throw std::invalid_argument("duration must be non-negative");
}

std::strong_ordering SemanticValue::order(const SemanticValue& o) const {
  if (kind() != o.kind()) throw std::logic_error("ordering values of different kinds");
  switch (kind()) {
    case Kind::Text: {
      int c = as_text().compare(o.as_text());
      return c < 0   ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    case Kind::Integer: {
      const Int &a = as_int(), &b = o.as_int();
      return a < b   ? std::strong_ordering::less
             : a > b ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    case Kind::Decimal: {
      const Rational &a = as_decimal(), &b = o.as_decimal();
      return a < b   ? std::strong_ordering::less
             : a > b ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    case Kind::Boolean:
      return as_bool() <=> o.as_bool();
    case Kind::Timestamp:
      return as_timestamp() <=> o.as_timestamp();
    case Kind::Duration:
      return as_duration() <=> o.as_duration();
  }
  throw std::logic_error("bad kind");
}

SemanticValue SemanticValue::succ() const {
  switch (kind()) {
    case Kind::Integer: return SemanticValue(as_int() + 1);
    case Kind::Timestamp: return SemanticValue(Timestamp{as_timestamp().secs + 1});
    case Kind::Duration: return SemanticValue(Duration{as_duration().secs + 1});
    default: throw std::logic_error("succ on non-discrete kind");
  }
}

SemanticValue SemanticValue::pred() const {
  switch (kind()) {
    case Kind::Integer: return SemanticValue(as_int() - 1);
    case Kind::Timestamp: return SemanticValue(Timestamp{as_timestamp().secs - 1});
    case Kind::Duration: return SemanticValue(Duration{as_duration().secs - 1});
    default: throw std::logic_error("pred on non-discrete kind");
  }
}

std::string format_duration(std::int64_t secs) {
  struct Unit { std::int64_t factor; const char* name; };
  static constexpr Unit units[] = {
      {604800, "weeks"}, {86400, "days"}, {3600, "h"}, {60, "min"}};
  for (const auto& u : units) {
    if (secs != 0 && secs % u.factor == 0)
      return std::to_string(secs / u.factor) + " " + u.name;
  }
  return std::to_string(secs) + " s";
}

namespace {

// Rationals whose denominator is 2^a 5^b print as plain decimals;
// anything else prints as "p/q". Either form re-parses to the same value.
std::string format_rational(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d != 1) return num.str() + "/" + den.str();
  // Scale num/den so the denominator becomes 10^k.
  Int scaled = num;
  Int q = den;
  int k = 0;
  while (q % 10 == 0) { q /= 10; ++k; }
  while (q % 2 == 0) { q /= 2; scaled *= 5; ++k; }
  while (q % 5 == 0) { q /= 5; scaled *= 2; ++k; }
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.str();
  std::string out;
  if (k == 0) {
    out = digits + ".0";
  } else {
    while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
    out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  }
  return neg ? "-" + out : out;
}

std::string quote_text(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string SemanticValue::to_string() const {
  switch (kind()) {
    case Kind::Text: return quote_text(as_text());
    case Kind::Integer: return as_int().str();
    case Kind::Decimal: return format_rational(as_decimal());
    case Kind::Boolean: return as_bool() ? "true" : "false";
    case Kind::Timestamp: return "@" + std::to_string(as_timestamp().secs);
    case Kind::Duration: return format_duration(as_duration().secs);
  }
  return "?";
}

}  // namespace ucpol
