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

#include "scstar/model.h"

#include <algorithm>
#include <cctype>

namespace scstar {

std::string_view history_name(History h) {
  switch (h) {
    case History::kNone: return "none";
    case History::kShallow: return "shallow";
    case History::kDeep: return "deep";
  }
  return "none";
}

Condition conjoin(const Condition& lhs, const Condition& rhs) {
  Condition out = lhs;
  out.atoms.insert(out.atoms.end(), rhs.atoms.begin(), rhs.atoms.end());
  return out;
}

bool OrState::operator==(const OrState&) const = default;
bool AndState::operator==(const AndState&) const = default;

const std::string& State::name() const {
  return std::visit([](const auto& s) -> const std::string& { return s.name; },
                    node);
}

bool State::optional() const {
  return std::visit([](const auto& s) { return s.optional; }, node);
}

void State::set_optional(bool value) {
  std::visit([value](auto& s) { s.optional = value; }, node);
}

std::span<const State> State::children() const {
  if (const OrState* o = as_or()) return o->substates;
  if (const AndState* a = as_and()) return a->regions;
  return {};
}

std::span<State> State::children() {
  if (OrState* o = as_or()) return o->substates;
  if (AndState* a = as_and()) return a->regions;
  return {};
}

State make_simple(std::string name, bool optional) {
  return SimpleState{std::move(name), optional};
}

// ---------------------------------------------------------------------------

StateIndex::StateIndex(const Statechart& sc) {
  auto visit = [this](auto&& self, const State& s,
                      const std::string& parent) -> void {
    if (!states_.contains(s.name())) {
      states_.emplace(s.name(), &s);
      parents_.emplace(s.name(), parent);
      order_.push_back(s.name());
    }
    if (const OrState* o = s.as_or()) {
      for (const Transition& t : o->transitions) {
        if (!transition_pos_.contains(t.name))
          transition_pos_.emplace(t.name, transitions_.size());
        transitions_.push_back({&t, o});
      }
    }
    for (const State& c : s.children()) self(self, c, s.name());
  };
  visit(visit, sc.root, std::string());
}

bool StateIndex::has_state(std::string_view name) const {
  return states_.find(name) != states_.end();
}

bool StateIndex::has_transition(std::string_view name) const {
  return transition_pos_.find(name) != transition_pos_.end();
}

const State* StateIndex::state(std::string_view name) const {
  auto it = states_.find(name);
  return it == states_.end() ? nullptr : it->second;
}

const StateIndex::Owned* StateIndex::transition(std::string_view name) const {
  auto it = transition_pos_.find(name);
  return it == transition_pos_.end() ? nullptr : &transitions_[it->second];
}

const std::string& StateIndex::parent(std::string_view name) const {
  auto it = parents_.find(name);
  return it == parents_.end() ? empty_ : it->second;
}

std::vector<std::string> StateIndex::ancestors(std::string_view name) const {
  std::vector<std::string> out;
  std::string cur = parent(name);
  while (!cur.empty()) {
    out.push_back(cur);
    cur = parent(cur);
  }
  return out;
}

bool StateIndex::is_descendant(std::string_view name,
                               std::string_view ancestor) const {
  if (!has_state(name)) return false;
  std::string cur = parent(name);
  while (!cur.empty()) {
    if (cur == ancestor) return true;
    cur = parent(cur);
  }
  return false;
}

std::string StateIndex::lift(std::string_view name,
                             std::string_view ancestor) const {
  if (!has_state(name)) return {};
  std::string cur(name);
  while (true) {
    const std::string& p = parent(cur);
    if (p.empty()) return {};
    if (p == ancestor) return cur;
    cur = p;
  }
}

std::string StateIndex::owner_for(std::string_view a,
                                  std::string_view b) const {
  for (const std::string& anc : ancestors(a)) {
    const State* s = state(anc);
    if (s->as_or() != nullptr && is_descendant(b, anc)) return anc;
  }
  return {};
}

bool StateIndex::crosses_regions(std::string_view a,
                                 std::string_view b) const {
  if (is_within(a, b) || is_within(b, a)) return false;
  for (const std::string& anc : ancestors(a)) {
    if (is_descendant(b, anc)) return state(anc)->kind() == StateKind::kAnd;
  }
  return false;
}

NameSet StateIndex::subtree(std::string_view name) const {
  NameSet out;
  if (const State* s = state(name))
    for_each_state(*s, [&](const State& x) { out.insert(x.name()); });
  return out;
}

// ---------------------------------------------------------------------------

bool is_plain_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '.' ||
           c == ',' || c == '(' || c == ')';
  });
}

bool is_transition_name(std::string_view name) {
  if (is_plain_identifier(name)) return true;
  constexpr std::string_view kPrefix = "comp(";
  if (!name.starts_with(kPrefix) || !name.ends_with(")")) return false;
  std::string_view body =
      name.substr(kPrefix.size(), name.size() - kPrefix.size() - 1);
  std::size_t parts = 0;
  while (true) {
    std::size_t comma = body.find(',');
    if (!is_plain_identifier(body.substr(0, comma))) return false;
    ++parts;
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return parts >= 2;
}

namespace {

void check_state(const State& s, const StateIndex& idx, Violations& out) {
  if (!is_plain_identifier(s.name()))
    out.push_back({"SC_NAME", s.name(), "state name is not a valid identifier"});
  if (const OrState* o = s.as_or()) {
    if (o->substates.empty())
      out.push_back({"SC_EMPTY_OR", o->name, "Or-state has no substates"});
    bool initial_ok = std::any_of(
        o->substates.begin(), o->substates.end(),
        [&](const State& c) { return c.name() == o->initial; });
    if (!initial_ok)
      out.push_back({"SC_INITIAL", o->name,
                     "initial '" + o->initial + "' is not a direct substate"});
    for (const Transition& t : o->transitions) {
      if (!is_transition_name(t.name))
        out.push_back(
            {"SC_NAME", t.name, "transition name is not a valid identifier"});
      if (t.trigger.empty())
        out.push_back({"SC_TRIGGER", t.name, "trigger is empty"});
      for (const std::string& e : t.trigger)
        if (!is_plain_identifier(e))
          out.push_back({"SC_TRIGGER", t.name, "invalid event '" + e + "'"});
      for (const Atom& a : t.condition.atoms) {
        if (const InState* in = std::get_if<InState>(&a);
            in != nullptr && !idx.has_state(in->state))
          out.push_back({"SC_UNKNOWN_STATE", t.name,
                         "condition refers to unknown state '" + in->state +
                             "'"});
      }
      bool endpoints_known = true;
      for (const std::string* end : {&t.source, &t.target}) {
        if (!idx.has_state(*end)) {
          out.push_back({"SC_UNKNOWN_STATE", t.name,
                         "endpoint '" + *end + "' does not exist"});
          endpoints_known = false;
        }
      }
      if (!endpoints_known) continue;
      if (!idx.is_descendant(t.source, o->name) ||
          !idx.is_descendant(t.target, o->name)) {
        out.push_back({"SC_OWNER", t.name,
                       "endpoints must lie inside owning state '" + o->name +
                           "'"});
        continue;
      }
      if (idx.crosses_regions(t.source, t.target)) {
        // Only composed paths, which leave the And-state through eliminated
        // states, may join two regions.
        if (t.via.empty())
          out.push_back({"SC_CROSS_REGION", t.name,
                         "transition connects two regions of an And-state"});
      } else if (idx.owner_for(t.source, t.target) != o->name) {
        out.push_back({"SC_OWNER", t.name,
                       "transition belongs to '" +
                           idx.owner_for(t.source, t.target) + "', not '" +
                           o->name + "'"});
      }
    }
  } else if (const AndState* a = s.as_and()) {
    if (a->regions.size() < 2)
      out.push_back({"SC_AND_ARITY", a->name,
                     "And-state needs at least two regions"});
  }
  for (const State& c : s.children()) check_state(c, idx, out);
}

}  // namespace

Violations check_well_formed(const Statechart& sc) {
  Violations out;
  if (sc.root.kind() != StateKind::kOr)
    out.push_back({"SC_ROOT", sc.root.name(), "root must be an Or-state"});

  std::map<std::string, int> state_count;
  for_each_state(sc.root, [&](const State& s) { ++state_count[s.name()]; });
  for (const auto& [name, n] : state_count)
    if (n > 1)
      out.push_back({"SC_DUPLICATE_STATE", name, "state name is not unique"});

  std::map<std::string, int> transition_count;
  for_each_transition(sc, [&](const Transition& t, const OrState&) {
    ++transition_count[t.name];
  });
  for (const auto& [name, n] : transition_count) {
    if (n > 1)
      out.push_back(
          {"SC_DUPLICATE_TRANSITION", name, "transition name is not unique"});
    if (state_count.contains(name))
      out.push_back({"SC_NAME_CLASH", name,
                     "name used for both a state and a transition"});
  }

  StateIndex idx(sc);
  check_state(sc.root, idx, out);
  return out;
}

NameSet VarElems::all() const {
  NameSet out = states;
  out.insert(transitions.begin(), transitions.end());
  return out;
}

VarElems var_elems(const Statechart& sc) {
  VarElems out;
  for_each_state(sc.root, [&](const State& s) {
    if (s.optional()) out.states.insert(s.name());
  });
  for_each_transition(sc, [&](const Transition& t, const OrState&) {
    if (t.optional) out.transitions.insert(t.name);
  });
  return out;
}

namespace {

void canonicalize_state(State& s) {
  auto by_name = [](const auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, State>)
      return a.name() < b.name();
    else
      return a.name < b.name;
  };
  if (OrState* o = s.as_or()) {
    std::sort(o->substates.begin(), o->substates.end(), by_name);
    std::sort(o->transitions.begin(), o->transitions.end(), by_name);
  } else if (AndState* a = s.as_and()) {
    std::sort(a->regions.begin(), a->regions.end(), by_name);
  }
  for (State& c : s.children()) canonicalize_state(c);
}

}  // namespace

Statechart canonicalize(const Statechart& sc) {
  Statechart out = sc;
  canonicalize_state(out.root);
  return out;
}

}  // namespace scstar
