// Copyright 2026 The scstar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Domain types shared by every stage: statecharts with optional elements
// (SC*), feature models, configurations and the feature/element binding.

#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "scstar/error.h"

namespace scstar {

using NameSet = std::set<std::string>;

enum class History { kNone, kShallow, kDeep };

std::string_view history_name(History h);

// Opaque boolean expression, compared by exact text.
struct Guard {
  std::string text;
  auto operator<=>(const Guard&) const = default;
};

// "in S": true while state S is active.
struct InState {
  std::string state;
  auto operator<=>(const InState&) const = default;
};

using Atom = std::variant<Guard, InState>;

// Conjunction of atoms. The empty sequence is `true`.
struct Condition {
  std::vector<Atom> atoms;

  bool is_true() const { return atoms.empty(); }
  bool operator==(const Condition&) const = default;
};

Condition conjoin(const Condition& lhs, const Condition& rhs);

struct Transition {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::string> trigger;  // never empty
  Condition condition;
  std::vector<std::string> actions;
  History history = History::kNone;
  bool optional = false;
  // States eliminated along the path this transition stands for. Empty for
  // authored transitions; filled by transition composition.
  std::vector<std::string> via;

  bool operator==(const Transition&) const = default;
};

struct State;

struct SimpleState {
  std::string name;
  bool optional = false;

  bool operator==(const SimpleState&) const = default;
};

struct OrState {
  std::string name;
  bool optional = false;
  std::vector<State> substates;
  std::string initial;
  std::vector<Transition> transitions;

  bool operator==(const OrState&) const;
};

struct AndState {
  std::string name;
  bool optional = false;
  std::vector<State> regions;

  bool operator==(const AndState&) const;
};

enum class StateKind { kSimple, kOr, kAnd };

struct State {
  std::variant<SimpleState, OrState, AndState> node;

  State(SimpleState s) : node(std::move(s)) {}  // NOLINT
  State(OrState s) : node(std::move(s)) {}      // NOLINT
  State(AndState s) : node(std::move(s)) {}     // NOLINT

  StateKind kind() const { return static_cast<StateKind>(node.index()); }
  const std::string& name() const;
  bool optional() const;
  void set_optional(bool value);

  const OrState* as_or() const { return std::get_if<OrState>(&node); }
  OrState* as_or() { return std::get_if<OrState>(&node); }
  const AndState* as_and() const { return std::get_if<AndState>(&node); }
  AndState* as_and() { return std::get_if<AndState>(&node); }

  // Or substates or And regions; empty for simple states.
  std::span<const State> children() const;
  std::span<State> children();

  bool operator==(const State&) const = default;
};

State make_simple(std::string name, bool optional = false);

// A statechart with variabilities. The root is always an Or-state.
struct Statechart {
  State root{OrState{}};

  bool operator==(const Statechart&) const = default;
};

// Read-only lookup tables over one statechart. Pointers are into the
// indexed statechart and die with it.
class StateIndex {
 public:
  explicit StateIndex(const Statechart& sc);

  struct Owned {
    const Transition* transition;
    const OrState* owner;
  };

  bool has_state(std::string_view name) const;
  bool has_transition(std::string_view name) const;
  const State* state(std::string_view name) const;
  const Owned* transition(std::string_view name) const;

  // Empty string for the root.
  const std::string& parent(std::string_view name) const;
  // True when `name` lies strictly inside `ancestor`.
  bool is_descendant(std::string_view name, std::string_view ancestor) const;
  bool is_within(std::string_view name, std::string_view ancestor) const {
    return name == ancestor || is_descendant(name, ancestor);
  }
  // The direct child of `ancestor` that is or contains `name`; empty if
  // `name` is not strictly inside `ancestor`.
  std::string lift(std::string_view name, std::string_view ancestor) const;
  // The deepest Or-state that strictly contains both states; empty if none.
  std::string owner_for(std::string_view a, std::string_view b) const;
  // True when both endpoints sit in different regions of one And-state
  // that is their lowest common ancestor.
  bool crosses_regions(std::string_view a, std::string_view b) const;

  // Names of every state in the subtree rooted at `name`, inclusive.
  NameSet subtree(std::string_view name) const;

  const std::vector<std::string>& states_in_order() const { return order_; }
  const std::vector<Owned>& transitions() const { return transitions_; }

 private:
  std::vector<std::string> ancestors(std::string_view name) const;

  std::map<std::string, const State*, std::less<>> states_;
  std::map<std::string, std::string, std::less<>> parents_;
  std::map<std::string, std::size_t, std::less<>> transition_pos_;
  std::vector<Owned> transitions_;
  std::vector<std::string> order_;
  std::string empty_;
};

// Empty iff every structural invariant of the SC* holds.
Violations check_well_formed(const Statechart& sc);

struct VarElems {
  NameSet states;       // SOp
  NameSet transitions;  // TOp

  NameSet all() const;
  bool empty() const { return states.empty() && transitions.empty(); }
  bool operator==(const VarElems&) const = default;
};

VarElems var_elems(const Statechart& sc);

// Substates and transitions sorted by name; everything else untouched.
Statechart canonicalize(const Statechart& sc);

void for_each_state(const State& s, const auto& fn) {
  fn(s);
  for (const State& c : s.children()) for_each_state(c, fn);
}

void for_each_state_mut(State& s, const auto& fn) {
  fn(s);
  for (State& c : s.children()) for_each_state_mut(c, fn);
}

void for_each_transition(const Statechart& sc, const auto& fn) {
  for_each_state(sc.root, [&](const State& s) {
    if (const OrState* o = s.as_or())
      for (const Transition& t : o->transitions) fn(t, *o);
  });
}

// Identifiers: non-empty, no whitespace, none of ".,()". Composed
// transition names "comp(a,b,...)" are accepted where noted.
bool is_plain_identifier(std::string_view name);
bool is_transition_name(std::string_view name);

// ---------------------------------------------------------------------------
// Feature models

struct FeatureGroup {
  std::string parent;
  NameSet children;

  auto operator<=>(const FeatureGroup&) const = default;
};

struct FeatureModel {
  NameSet funcs;
  std::string root;
  std::vector<FeatureGroup> mand;
  std::vector<FeatureGroup> opt;
  std::vector<FeatureGroup> alt;
  std::vector<FeatureGroup> or_rel;

  bool operator==(const FeatureModel&) const = default;
};

// A product: selected features F and tree edges R.
struct Configuration {
  NameSet selected;
  std::set<FeatureGroup> edges;

  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

// ---------------------------------------------------------------------------
// Feature to element binding

struct ImpEntry {
  NameSet elements;
  NameSet includes;  // features whose elements are folded into this one

  bool operator==(const ImpEntry&) const = default;
};

struct ImpMapping {
  std::map<std::string, ImpEntry> entries;

  bool operator==(const ImpMapping&) const = default;
};

// One rule application recorded during instantiation.
struct TraceStep {
  std::string rule;     // e.g. "delete_simple_state"
  std::string subject;  // element the rule was applied to
  std::vector<std::string> added;
  std::vector<std::string> removed;
  std::vector<std::string> modified;

  bool operator==(const TraceStep&) const = default;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;

  bool operator==(const RewriteTrace&) const = default;
};

struct ProductLine {
  FeatureModel fm;
  Statechart sc;
  ImpMapping imp;

  bool operator==(const ProductLine&) const = default;
};

}  // namespace scstar
