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

#include "ucpol/ast.hpp"

#include <algorithm>
#include <tuple>

#include "ucpol/errors.hpp"

namespace ucpol {

const char* category_name(Category c) {
  switch (c) {
    case Category::SAT: return "SAT";
    case Category::OAT: return "OAT";
    case Category::CNAT: return "CNAT";
  }
  return "?";
}

const char* lifecycle_name(Lifecycle lc) { return lc == Lifecycle::DP ? "dp" : "eot"; }

const char* effect_name(Effect e) { return e == Effect::Permit ? "permit" : "deny"; }

const char* policy_kind_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::RoP: return "RoP";
    case PolicyKind::QoP: return "QoP";
    case PolicyKind::CSP: return "CSP";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Permit: return "permit";
    case Outcome::Deny: return "deny";
    case Outcome::NotApplicable: return "not-applicable";
    case Outcome::Indeterminate: return "indeterminate";
  }
  return "?";
}

Kind AttributePredicate::value_kind() const {
  if (!values.empty()) return values[0].kind();
  for (const auto& iv : intervals) {
    if (iv.lo) return iv.lo->kind();
    if (iv.hi) return iv.hi->kind();
  }
  // A fully unbounded interval: default to integer; grounding against a
  // vocabulary will recoerce.
  if (!intervals.empty()) return Kind::Integer;
  return Kind::Text;
}

ValueRange AttributePredicate::raw_range() const {
  Kind k = value_kind();
  ValueRange base;
  switch (op) {
    case PredOp::Eq:
      base = ValueRange::singleton(values.at(0));
      break;
    case PredOp::Ne:
      base = ValueRange::singleton(values.at(0)).complement_within(ValueRange::full(k));
      break;
    case PredOp::Lt:
    case PredOp::Le:
    case PredOp::Gt:
    case PredOp::Ge: {
      if (!SemanticValue::is_ordered(k))
        throw KindMismatchError("order operator on unordered kind " +
                                std::string(kind_name(k)) + " for attribute " + attr_name);
      Interval iv;
      if (op == PredOp::Lt || op == PredOp::Le) {
        iv.hi = values.at(0);
        iv.hi_incl = (op == PredOp::Le);
      } else {
        iv.lo = values.at(0);
        iv.lo_incl = (op == PredOp::Ge);
      }
      base = ValueRange::of_interval(k, iv);
      break;
    }
    case PredOp::In:
      if (!intervals.empty())
        base = ValueRange::of_intervals(k, intervals);
      else
        base = ValueRange::of_set(k, values);
      break;
  }
  if (negated) base = base.complement_within(ValueRange::full(k));
  return base;
}

namespace {

std::string render_interval_key(const Interval& iv) {
  std::string s = iv.lo_incl ? "[" : "(";
  s += iv.lo ? iv.lo->to_string() : "-inf";
  s += ",";
  s += iv.hi ? iv.hi->to_string() : "inf";
  s += iv.hi_incl ? "]" : ")";
  return s;
}

}  // namespace

AttributePredicate AttributePredicate::from_range(Category cat, std::string attr,
                                                  const ValueRange& r,
                                                  std::optional<std::string> issuer,
                                                  std::optional<Lifecycle> lifecycle) {
  AttributePredicate p;
  p.category = cat;
  p.attr_name = std::move(attr);
  p.issuer = std::move(issuer);
  p.lifecycle = lifecycle;
  if (r.is_set_based()) {
    if (r.complemented() && r.set_values().size() == 1) {
      p.op = PredOp::Ne;
      p.values = r.set_values();
    } else if (r.complemented()) {
      p.op = PredOp::In;
      p.values = r.set_values();
      p.negated = true;
    } else if (r.set_values().size() == 1) {
      p.op = PredOp::Eq;
      p.values = r.set_values();
    } else {
      p.op = PredOp::In;
      p.values = r.set_values();
    }
    return p;
  }
  const auto& ivs = r.intervals();
  if (ivs.size() == 1) {
    const Interval& iv = ivs[0];
    // The duration floor counts as an unbounded lower end.
    bool lo_open = !iv.lo || (r.kind() == Kind::Duration && iv.lo_incl &&
                              iv.lo->as_duration().secs == 0);
    if (auto v = r.as_singleton()) {
      p.op = PredOp::Eq;
      p.values = {*v};
      return p;
    }
    if (lo_open && iv.hi) {
      p.op = iv.hi_incl ? PredOp::Le : PredOp::Lt;
      p.values = {*iv.hi};
      return p;
    }
    if (iv.lo && !iv.hi && !(r.kind() == Kind::Duration && iv.lo_incl &&
                             iv.lo->as_duration().secs == 0)) {
      p.op = iv.lo_incl ? PredOp::Ge : PredOp::Gt;
      p.values = {*iv.lo};
      return p;
    }
  }
  p.op = PredOp::In;
  p.intervals = ivs;
  return p;
}

std::string AttributePredicate::sort_key() const {
  std::string s = category_name(category);
  s += "/";
  s += attr_name;
  s += "/";
  s += issuer ? *issuer : "";
  s += "/";
  s += lifecycle ? lifecycle_name(*lifecycle) : "";
  s += "/";
  s += std::to_string(static_cast<int>(op));
  s += negated ? "!" : "=";
  for (const auto& v : values) s += v.to_string() + ";";
  for (const auto& iv : intervals) s += render_interval_key(iv) + ";";
  return s;
}

ValueRange predicate_range(const AttributePredicate& p, const Vocabulary& v) {
  const VocabEntry& entry = v.require(p.category, p.attr_name);
  AttributePredicate q = p;
  for (auto& val : q.values) val = coerce_value(val, entry.kind);
  for (auto& iv : q.intervals) {
    if (iv.lo) iv.lo = coerce_value(*iv.lo, entry.kind);
    if (iv.hi) iv.hi = coerce_value(*iv.hi, entry.kind);
  }
  if (!q.values.empty() || !q.intervals.empty()) {
    if (q.value_kind() != entry.kind)
      throw KindMismatchError("attribute " + p.attr_name + " has kind " +
                              kind_name(entry.kind) + " but predicate value has kind " +
                              kind_name(q.value_kind()));
  }
  return range_intersect(q.raw_range(), entry.domain);
}

CondExpr CondExpr::make_pred(AttributePredicate p) {
  CondExpr e;
  e.node = Node::Pred;
  e.pred = std::move(p);
  return e;
}

CondExpr CondExpr::make_and(std::vector<CondExpr> cs) {
  CondExpr e;
  e.node = Node::And;
  e.children = std::move(cs);
  return e;
}

CondExpr CondExpr::make_or(std::vector<CondExpr> cs) {
  CondExpr e;
  e.node = Node::Or;
  e.children = std::move(cs);
  return e;
}

CondExpr CondExpr::make_not(CondExpr c) {
  CondExpr e;
  e.node = Node::Not;
  e.children.push_back(std::move(c));
  return e;
}

CondExpr CondExpr::make_bool(bool b) {
  CondExpr e;
  e.node = b ? Node::True : Node::False;
  return e;
}

namespace {

constexpr std::size_t kMaxConjuncts = 4096;

// Negation normal form: push Not down to the predicate leaves.
CondExpr to_nnf(const CondExpr& e, bool neg) {
  switch (e.node) {
    case CondExpr::Node::True:
      return CondExpr::make_bool(!neg);
    case CondExpr::Node::False:
      return CondExpr::make_bool(neg);
    case CondExpr::Node::Pred: {
      AttributePredicate p = e.pred;
      if (neg) p.negated = !p.negated;
      return CondExpr::make_pred(std::move(p));
    }
    case CondExpr::Node::Not:
      return to_nnf(e.children.at(0), !neg);
    case CondExpr::Node::And:
    case CondExpr::Node::Or: {
      bool is_and = (e.node == CondExpr::Node::And) != neg;
      std::vector<CondExpr> cs;
      cs.reserve(e.children.size());
      for (const auto& c : e.children) cs.push_back(to_nnf(c, neg));
      return is_and ? CondExpr::make_and(std::move(cs)) : CondExpr::make_or(std::move(cs));
    }
  }
  throw Error("bad condition node");
}

// Distributes conjunction over disjunction. Each result entry is a list
// of raw predicates; std::nullopt marks a conjunct killed by `false`.
std::vector<std::vector<AttributePredicate>> distribute(const CondExpr& e) {
  switch (e.node) {
    case CondExpr::Node::True:
      return {{}};
    case CondExpr::Node::False:
      return {};
    case CondExpr::Node::Pred:
      return {{e.pred}};
    case CondExpr::Node::Or: {
      std::vector<std::vector<AttributePredicate>> out;
      for (const auto& c : e.children) {
        auto sub = distribute(c);
        out.insert(out.end(), sub.begin(), sub.end());
        if (out.size() > kMaxConjuncts) throw Error("condition too large to normalize");
      }
      return out;
    }
    case CondExpr::Node::And: {
      std::vector<std::vector<AttributePredicate>> out = {{}};
      for (const auto& c : e.children) {
        auto sub = distribute(c);
        std::vector<std::vector<AttributePredicate>> next;
        for (const auto& a : out)
          for (const auto& b : sub) {
            next.push_back(a);
            next.back().insert(next.back().end(), b.begin(), b.end());
          }
        out = std::move(next);
        if (out.size() > kMaxConjuncts) throw Error("condition too large to normalize");
      }
      return out;
    }
    case CondExpr::Node::Not:
      throw Error("NNF should have removed negations");
  }
  throw Error("bad condition node");
}

using MergeKey = std::tuple<Category, std::string, std::optional<std::string>,
                            std::optional<Lifecycle>>;

MergeKey merge_key(const AttributePredicate& p) {
  return {p.category, p.attr_name, p.issuer, p.lifecycle};
}

// Merge same-attribute predicates of one conjunct by range intersection.
// Returns nullopt when the intersection is empty (conjunct unsatisfiable).
std::optional<Conjunct> merge_conjunct(const std::vector<AttributePredicate>& preds) {
  std::map<MergeKey, ValueRange> merged;
  std::vector<MergeKey> order;
  for (const auto& p : preds) {
    ValueRange r = p.raw_range();
    MergeKey k = merge_key(p);
    auto it = merged.find(k);
    if (it == merged.end()) {
      merged.emplace(k, std::move(r));
      order.push_back(k);
    } else {
      it->second = range_intersect(it->second, r);
    }
  }
  Conjunct out;
  for (const auto& k : order) {
    const ValueRange& r = merged.at(k);
    if (r.is_empty()) return std::nullopt;
    out.push_back(AttributePredicate::from_range(std::get<0>(k), std::get<1>(k), r,
                                                 std::get<2>(k), std::get<3>(k)));
  }
  std::sort(out.begin(), out.end(), [](const AttributePredicate& a, const AttributePredicate& b) {
    return a.sort_key() < b.sort_key();
  });
  return out;
}

std::string conjunct_key(const Conjunct& c) {
  std::string s;
  for (const auto& p : c) s += p.sort_key() + "|";
  return s;
}

}  // namespace

Condition to_dnf(const CondExpr& raw) {
  CondExpr nnf = to_nnf(raw, false);
  auto raw_conjuncts = distribute(nnf);
  std::vector<std::pair<std::string, Conjunct>> keyed;
  for (const auto& rc : raw_conjuncts) {
    auto merged = merge_conjunct(rc);
    if (!merged) continue;
    keyed.emplace_back(conjunct_key(*merged), std::move(*merged));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  Condition cond;
  for (auto& [k, c] : keyed) cond.conjuncts.push_back(std::move(c));
  return cond;
}

std::string ObligationSpec::sort_key() const {
  std::string s = (negated ? "!" : "") + action + "(";
  for (const auto& [k, v] : parameters) s += k + "=" + v.to_string() + ",";
  s += ")";
  if (window) s += "[" + std::to_string(window->t_s) + "," + std::to_string(window->t_e) + "]";
  return s;
}

std::vector<std::string> Rule::effective_rights() const {
  std::vector<std::string> out;
  for (const auto& r : rights)
    if (!r.negated) out.push_back(r.id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<AttrKey> Policy::referenced_attributes() const {
  std::set<AttrKey> out;
  for (const auto& r : rules) {
    for (const auto& c : r.condition.conjuncts)
      for (const auto& p : c) out.insert({p.category, p.attr_name});
    for (const auto& p : r.restrictions) out.insert({p.category, p.attr_name});
  }
  return out;
}

const VocabEntry* Vocabulary::find(Category c, const std::string& name) const {
  auto it = entries.find({c, name});
  return it == entries.end() ? nullptr : &it->second;
}

const VocabEntry& Vocabulary::require(Category c, const std::string& name) const {
  const VocabEntry* e = find(c, name);
  if (!e)
    throw UnknownAttributeError(std::string("unknown attribute ") + category_name(c) + " " +
                                name);
  return *e;
}

const Assignment* Request::find(Category c, const std::string& name) const {
  for (const auto& a : assignments)
    if (a.category == c && a.attr_name == name) return &a;
  return nullptr;
}

RuleVerdict RuleVerdict::matched(std::string id, Effect e) {
  return RuleVerdict{std::move(id), Result::Matched, e, {}};
}

RuleVerdict RuleVerdict::not_applicable(std::string id, Effect e) {
  return RuleVerdict{std::move(id), Result::NotApplicable, e, {}};
}

RuleVerdict RuleVerdict::indeterminate(std::string id, Effect e,
                                       std::vector<std::string> missing) {
  return RuleVerdict{std::move(id), Result::Indeterminate, e, std::move(missing)};
}

std::string RuleVerdict::describe() const {
  switch (result) {
    case Result::Matched:
      return std::string("matched(") + effect_name(effect) + ")";
    case Result::NotApplicable:
      return "not-applicable";
    case Result::Indeterminate: {
      std::string s = std::string("indeterminate(") + effect_name(effect);
      for (const auto& m : missing) s += " " + m;
      return s + ")";
    }
  }
  return "?";
}

SemanticValue coerce_value(const SemanticValue& v, Kind target) {
  if (v.kind() == target) return v;
  if (v.kind() == Kind::Integer) {
    switch (target) {
      case Kind::Decimal:
        return SemanticValue(Rational(v.as_int()));
      case Kind::Timestamp: {
        if (v.as_int() < std::numeric_limits<std::int64_t>::min() ||
            v.as_int() > std::numeric_limits<std::int64_t>::max())
          throw KindMismatchError("timestamp literal out of range");
        return SemanticValue::timestamp(static_cast<std::int64_t>(v.as_int()));
      }
      case Kind::Duration: {
        if (v.as_int() < 0 || v.as_int() > std::numeric_limits<std::int64_t>::max())
          throw KindMismatchError("duration literal out of range");
        return SemanticValue::duration(static_cast<std::int64_t>(v.as_int()));
      }
      default:
        break;
    }
  }
  throw KindMismatchError(std::string("cannot use a ") + kind_name(v.kind()) +
                          " value where " + kind_name(target) + " is expected");
}

}  // namespace ucpol
