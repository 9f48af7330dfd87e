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

#ifndef UCPOL_AST_HPP
#define UCPOL_AST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ucpol/range.hpp"
#include "ucpol/value.hpp"

namespace ucpol {

struct Vocabulary;

enum class Category { SAT, OAT, CNAT };
enum class Lifecycle { DP, EOT };
enum class Effect { Permit, Deny };
enum class PolicyKind { RoP, QoP, CSP };
enum class PredOp { Eq, Ne, Lt, Le, Gt, Ge, In };

const char* category_name(Category c);
const char* lifecycle_name(Lifecycle lc);
const char* effect_name(Effect e);
const char* policy_kind_name(PolicyKind k);

using AttrKey = std::pair<Category, std::string>;

// One comparison of an attribute against a value, value set or interval
// union. An `In` predicate carries either scalar set members (unordered
// kinds) or intervals (ordered kinds); merged predicates produced by DNF
// normalization use the interval payload for arbitrary range unions.
struct AttributePredicate {
  Category category = Category::SAT;
  std::string attr_name;
  PredOp op = PredOp::Eq;
  std::vector<SemanticValue> values;  // Eq..Ge: exactly one; In: set members
  std::vector<Interval> intervals;    // In over an ordered kind
  bool negated = false;
  std::optional<std::string> issuer;
  std::optional<Lifecycle> lifecycle;

  bool operator==(const AttributePredicate&) const = default;

  /// Kind of the comparison payload.
  Kind value_kind() const;

  // Denotation against the unbounded kind universe, with the negation
  // flag folded in. Grounding against the vocabulary domain is
  // predicate_range's job.
  ValueRange raw_range() const;

  /// Canonical surface form for an arbitrary range (picks =, !=, <, ... or in).
  static AttributePredicate from_range(Category cat, std::string attr, const ValueRange& r,
                                       std::optional<std::string> issuer = std::nullopt,
                                       std::optional<Lifecycle> lifecycle = std::nullopt);

  /// Stable key used for canonical ordering of predicates.
  std::string sort_key() const;
};

// The set of values for which the predicate holds, intersected with the
// vocabulary's declared domain for the attribute. Negated predicates
// denote complements within that domain.
ValueRange predicate_range(const AttributePredicate& p, const Vocabulary& v);

/// One conjunct of a DNF condition; empty means "always true".
using Conjunct = std::vector<AttributePredicate>;

// A condition in disjunctive normal form. Within each conjunct,
// predicates on the same (category, attribute, issuer, lifecycle) have
// been merged by range intersection; unsatisfiable conjuncts are
// dropped. No conjuncts at all means the condition is unsatisfiable.
struct Condition {
  std::vector<Conjunct> conjuncts;

  bool unsatisfiable() const { return conjuncts.empty(); }
  static Condition always_true() { return Condition{{Conjunct{}}}; }
  static Condition never() { return Condition{}; }

  bool operator==(const Condition&) const = default;
};

// Boolean expression over predicates as parsed, before DNF normalization.
struct CondExpr {
  enum class Node { Pred, And, Or, Not, True, False };
  Node node = Node::True;
  AttributePredicate pred;         // Node::Pred
  std::vector<CondExpr> children;  // And/Or: n-ary, Not: one

  static CondExpr make_pred(AttributePredicate p);
  static CondExpr make_and(std::vector<CondExpr> cs);
  static CondExpr make_or(std::vector<CondExpr> cs);
  static CondExpr make_not(CondExpr c);
  static CondExpr make_bool(bool b);
};

/// Normalizes a condition expression to canonical DNF.
Condition to_dnf(const CondExpr& raw);

/// Obligation deadline relative to the grant time, in seconds.
struct ObligationWindow {
  std::int64_t t_s = 0;
  std::int64_t t_e = 0;
  auto operator<=>(const ObligationWindow&) const = default;
};

struct ObligationSpec {
  std::string action;
  std::map<std::string, SemanticValue> parameters;
  std::optional<ObligationWindow> window;
  // The grammar admits negated actions; they are carried through and
  // serialized but never scheduled as obliged events.
  bool negated = false;

  bool operator==(const ObligationSpec&) const = default;
  std::string sort_key() const;
};

struct RightRef {
  std::string id;
  bool negated = false;
  auto operator<=>(const RightRef&) const = default;
};

struct Rule {
  std::string id;
  Effect effect = Effect::Permit;
  std::vector<RightRef> rights;  // non-empty
  std::vector<ObligationSpec> obligations;
  std::vector<AttributePredicate> restrictions;  // CNAT predicates
  Condition condition = Condition::always_true();
  Lifecycle lifecycle = Lifecycle::DP;
  std::vector<std::string> stakeholders;

  bool operator==(const Rule&) const = default;

  /// Positive (non-negated) right ids, sorted; negated rights are
  /// excluded from granting and gating.
  std::vector<std::string> effective_rights() const;
};

struct Policy {
  std::string id;
  PolicyKind kind = PolicyKind::RoP;
  std::vector<std::string> stakeholders;  // non-empty
  std::vector<Rule> rules;
  // Rule combination is fixed to deny-override.

  bool operator==(const Policy&) const = default;

  /// All (category, attribute) pairs referenced by conditions and restrictions.
  std::set<AttrKey> referenced_attributes() const;
};

struct VocabEntry {
  Kind kind = Kind::Text;
  ValueRange domain;  // full declared range

  bool operator==(const VocabEntry&) const = default;
};

// The knowledge base policies and requests are validated against:
// attribute domains, trust groups (certificate chains), and sample
// grids for enumerating ordered domains.
struct Vocabulary {
  std::map<AttrKey, VocabEntry> entries;
  std::map<std::string, std::set<std::string>> trust_registry;
  std::map<AttrKey, std::vector<SemanticValue>> grids;

  const VocabEntry* find(Category c, const std::string& name) const;
  const VocabEntry& require(Category c, const std::string& name) const;

  bool operator==(const Vocabulary&) const = default;
};

struct Assignment {
  Category category = Category::SAT;
  std::string attr_name;
  SemanticValue value;
  std::optional<std::string> issuer;

  bool operator==(const Assignment&) const = default;
};

struct Request {
  std::vector<Assignment> assignments;  // at most one per (category, attribute)
  std::vector<std::string> demanded_rights;
  std::vector<ObligationSpec> promised_obligations;
  std::int64_t t = 0;

  const Assignment* find(Category c, const std::string& name) const;
  bool operator==(const Request&) const = default;
};

enum class Outcome { Permit, Deny, NotApplicable, Indeterminate };

const char* outcome_name(Outcome o);

// Per-rule evaluation result feeding the combinator. For Indeterminate
// the effect records what the rule would have contributed, and
// `missing` lists the predicates that could not be resolved.
struct RuleVerdict {
  enum class Result { Matched, NotApplicable, Indeterminate };
  std::string rule_id;
  Result result = Result::NotApplicable;
  Effect effect = Effect::Permit;
  std::vector<std::string> missing;

  static RuleVerdict matched(std::string id, Effect e);
  static RuleVerdict not_applicable(std::string id, Effect e);
  static RuleVerdict indeterminate(std::string id, Effect e, std::vector<std::string> missing);

  std::string describe() const;
};

struct Decision {
  Outcome outcome = Outcome::NotApplicable;
  std::vector<std::string> granted_rights;
  std::vector<ObligationSpec> imposed_obligations;
  std::vector<AttributePredicate> imposed_restrictions;
  std::int64_t t = 0;
  std::vector<RuleVerdict> trace;
};

/// Coerces plain literals to the declared kind where unambiguous
/// (integer -> timestamp / duration / decimal). Throws KindMismatchError
/// when the value cannot inhabit the kind.
SemanticValue coerce_value(const SemanticValue& v, Kind target);

}  // namespace ucpol

#endif  // UCPOL_AST_HPP
