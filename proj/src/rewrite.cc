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

#include "scstar/rewrite.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace scstar {

namespace {

State* find_state(State& s, std::string_view name) {
  if (s.name() == name) return &s;
  for (State& c : s.children())
    if (State* hit = find_state(c, name)) return hit;
  return nullptr;
}

bool erase_state(State& s, std::string_view name) {
  auto erase_from = [&](std::vector<State>& v) {
    auto it = std::find_if(v.begin(), v.end(),
                           [&](const State& c) { return c.name() == name; });
    if (it == v.end()) return false;
    v.erase(it);
    return true;
  };
  if (OrState* o = s.as_or(); o != nullptr && erase_from(o->substates))
    return true;
  if (AndState* a = s.as_and(); a != nullptr && erase_from(a->regions))
    return true;
  for (State& c : s.children())
    if (erase_state(c, name)) return true;
  return false;
}

void erase_transitions(Statechart& sc, const NameSet& names) {
  for_each_state_mut(sc.root, [&](State& s) {
    if (OrState* o = s.as_or())
      std::erase_if(o->transitions,
                    [&](const Transition& t) { return names.contains(t.name); });
  });
}

const State& require_state(const StateIndex& idx, std::string_view name) {
  const State* s = idx.state(name);
  if (s == nullptr)
    throw Error(ErrorCode::kUnknownReference,
                "no state named '" + std::string(name) + "'");
  return *s;
}

bool via_overlap(const Transition& a, const Transition& b) {
  for (const std::string& x : a.via)
    if (std::find(b.via.begin(), b.via.end(), x) != b.via.end()) return true;
  return false;
}

struct Boundary {
  std::vector<const Transition*> entries;
  std::vector<const Transition*> exits;
  NameSet removed;  // subtree states plus every adjacent transition
};

Boundary boundary_of(std::string_view state, const StateIndex& idx,
                     const PendingSet& pending) {
  Boundary b;
  b.removed = idx.subtree(state);
  const NameSet inside = b.removed;
  for (const StateIndex::Owned& o : idx.transitions()) {
    const Transition& t = *o.transition;
    const bool from_in = inside.contains(t.source);
    const bool to_in = inside.contains(t.target);
    if (!from_in && !to_in && !inside.contains(o.owner->name)) continue;
    b.removed.insert(t.name);
    if (t.optional || pending.contains(t.name)) continue;
    if (!from_in && to_in) b.entries.push_back(&t);
    if (from_in && !to_in) b.exits.push_back(&t);
  }
  return b;
}

using PassFn =
    std::function<bool(const Transition& entry, const Transition& exit)>;

// Shared rebuilding scheme for all three state kinds: drop the state and
// everything adjacent to it, then bridge every admitted non-optional
// entry/exit pair with a composed transition.
Rewrite eliminate(std::string_view state, const Statechart& sc,
                  const PendingSet& pending, const StateIndex& idx,
                  const PassFn& pass) {
  const State& s = require_state(idx, state);
  if (!s.optional())
    throw Error(ErrorCode::kNotOptional,
                "state '" + s.name() + "' is not optional");
  const std::string& parent_name = idx.parent(state);
  if (parent_name.empty())
    throw Error(ErrorCode::kInvalidInput, "the root cannot be deleted");
  const State& parent = *idx.state(parent_name);
  if (const OrState* p = parent.as_or()) {
    if (p->initial == state)
      throw Error(ErrorCode::kIsInitial, "state '" + s.name() +
                                             "' is still the initial of '" +
                                             p->name + "'");
  } else if (const AndState* a = parent.as_and();
             a != nullptr && a->regions.size() <= 2) {
    throw Error(ErrorCode::kEmptyComposite,
                "deleting region '" + s.name() + "' leaves And-state '" +
                    a->name + "' with a single region");
  }

  Boundary b = boundary_of(state, idx, pending);
  std::vector<Transition> composed;
  for (const Transition* in : b.entries) {
    for (const Transition* out : b.exits) {
      if (via_overlap(*in, *out) || !pass(*in, *out)) continue;
      Transition entry = *in;
      Transition exit = *out;
      entry.target = s.name();
      exit.source = s.name();
      composed.push_back(comp(entry, exit));
    }
  }

  Rewrite r;
  r.machine = sc;
  erase_state(r.machine.root, state);
  erase_transitions(r.machine, b.removed);
  r.removed = std::move(b.removed);

  for (Transition& t : composed) {
    StateIndex after(r.machine);
    if (after.has_transition(t.name)) continue;
    std::string owner = after.owner_for(t.source, t.target);
    State* o = find_state(r.machine.root, owner);
    if (o == nullptr || o->as_or() == nullptr)
      throw Error(ErrorCode::kInvalidInput,
                  "no owner for composed transition '" + t.name + "'");
    r.added.push_back(t.name);
    o->as_or()->transitions.push_back(std::move(t));
  }
  return r;
}

bool instate_atoms_hold(const Condition& c,
                        const std::function<bool(const std::string&)>& active) {
  for (const Atom& a : c.atoms)
    if (const InState* in = std::get_if<InState>(&a); in && !active(in->state))
      return false;
  return true;
}

}  // namespace

std::vector<std::string> name_components(std::string_view name) {
  constexpr std::string_view kPrefix = "comp(";
  if (!name.starts_with(kPrefix) || !name.ends_with(")"))
    return {std::string(name)};
  std::string_view body =
      name.substr(kPrefix.size(), name.size() - kPrefix.size() - 1);
  std::vector<std::string> out;
  while (true) {
    std::size_t comma = body.find(',');
    out.emplace_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::string composed_name(std::string_view first, std::string_view second) {
  std::string out = "comp(";
  bool sep = false;
  for (std::string_view part : {first, second}) {
    for (const std::string& c : name_components(part)) {
      if (sep) out += ',';
      out += c;
      sep = true;
    }
  }
  return out + ")";
}

Transition comp(const Transition& t1, const Transition& t2) {
  if (t1.optional || t2.optional)
    throw Error(ErrorCode::kOptionalCompose,
                "cannot compose optional transitions '" + t1.name + "' and '" +
                    t2.name + "'");
  if (t1.target != t2.source)
    throw Error(ErrorCode::kInvalidInput,
                "'" + t1.name + "' does not end where '" + t2.name +
                    "' starts");
  Transition t;
  t.name = composed_name(t1.name, t2.name);
  t.source = t1.source;
  t.target = t2.target;
  t.trigger = t1.trigger;
  t.trigger.insert(t.trigger.end(), t2.trigger.begin(), t2.trigger.end());
  t.condition = conjoin(t1.condition, t2.condition);
  t.actions = t1.actions;
  t.actions.insert(t.actions.end(), t2.actions.begin(), t2.actions.end());
  t.history = t2.history;
  t.optional = false;
  t.via = t1.via;
  t.via.push_back(t1.target);
  t.via.insert(t.via.end(), t2.via.begin(), t2.via.end());
  return t;
}

std::vector<TransitionPair> entry_exit_pairs(std::string_view state,
                                             const Statechart& sc,
                                             const PendingSet& pending) {
  StateIndex idx(sc);
  const State& s = require_state(idx, state);
  if (s.kind() != StateKind::kSimple)
    throw Error(ErrorCode::kNotSimple,
                "state '" + s.name() + "' is a composite");
  Boundary b = boundary_of(state, idx, pending);
  std::vector<TransitionPair> out;
  for (const Transition* in : b.entries)
    for (const Transition* x : b.exits) out.emplace_back(*in, *x);
  return out;
}

Rewrite delete_simple_state(std::string_view state, const Statechart& sc,
                            const PendingSet& pending) {
  StateIndex idx(sc);
  if (require_state(idx, state).kind() != StateKind::kSimple)
    throw Error(ErrorCode::kNotSimple,
                "state '" + std::string(state) + "' is a composite");
  return eliminate(state, sc, pending, idx,
                   [](const Transition&, const Transition&) { return true; });
}

NameSet reachable_or(std::string_view composite, std::string_view from,
                     const Statechart& sc, const PendingSet& pending,
                     const RewriteOptions& options) {
  StateIndex idx(sc);
  const OrState* o = require_state(idx, composite).as_or();
  if (o == nullptr)
    throw Error(ErrorCode::kInvalidInput,
                "state '" + std::string(composite) + "' is not an Or-state");
  if (idx.parent(from) != o->name || !idx.has_state(from))
    throw Error(ErrorCode::kNotSubstate,
                "'" + std::string(from) + "' is not a direct substate of '" +
                    o->name + "'");

  std::map<std::string, NameSet> succ;
  for (const Transition& t : o->transitions) {
    if (!options.pending_grants_reachability && pending.contains(t.name))
      continue;
    succ[idx.lift(t.source, o->name)].insert(idx.lift(t.target, o->name));
  }
  NameSet seen = {std::string(from)};
  std::deque<std::string> work = {std::string(from)};
  while (!work.empty()) {
    std::string cur = work.front();
    work.pop_front();
    for (const std::string& n : succ[cur])
      if (seen.insert(n).second) work.push_back(n);
  }
  return seen;
}

Rewrite delete_or_state(std::string_view state, const Statechart& sc,
                        const PendingSet& pending,
                        const RewriteOptions& options) {
  StateIndex idx(sc);
  const OrState* o = require_state(idx, state).as_or();
  if (o == nullptr)
    throw Error(ErrorCode::kInvalidInput,
                "state '" + std::string(state) + "' is not an Or-state");
  std::map<std::string, NameSet> cache;
  auto pass = [&](const Transition& entry, const Transition& exit) {
    // Default entry: a transition into the composite itself starts at its
    // initial substate.
    std::string from = entry.target == o->name
                           ? o->initial
                           : idx.lift(entry.target, o->name);
    if (exit.source == o->name) return true;
    auto it = cache.find(from);
    if (it == cache.end())
      it = cache.emplace(from, reachable_or(o->name, from, sc, pending,
                                            options))
               .first;
    return it->second.contains(idx.lift(exit.source, o->name));
  };
  return eliminate(state, sc, pending, idx, pass);
}

namespace {

struct AndView {
  const AndState* and_state = nullptr;
  std::vector<const OrState*> regions;  // null for non-Or regions
};

AndView and_view(std::string_view composite, const StateIndex& idx) {
  AndView v;
  v.and_state = require_state(idx, composite).as_and();
  if (v.and_state == nullptr)
    throw Error(ErrorCode::kNotAnd,
                "state '" + std::string(composite) + "' is not an And-state");
  for (const State& r : v.and_state->regions) v.regions.push_back(r.as_or());
  return v;
}

std::size_t region_of(const AndView& v, const StateIndex& idx,
                      std::string_view name) {
  std::string region = idx.lift(name, v.and_state->name);
  for (std::size_t i = 0; i < v.and_state->regions.size(); ++i)
    if (v.and_state->regions[i].name() == region) return i;
  return v.and_state->regions.size();
}

// Whether "in X" can hold while the And-state sits in `tuple`. States
// outside the And-state are not tracked and assumed satisfiable.
bool active_in(const AndView& v, const StateIndex& idx, const StateTuple& tuple,
               const std::string& x) {
  const std::string& e = v.and_state->name;
  if (x == e || idx.is_descendant(e, x)) return true;
  if (!idx.is_descendant(x, e)) return true;
  std::size_t i = region_of(v, idx, x);
  const State& region = v.and_state->regions[i];
  if (x == region.name() || v.regions[i] == nullptr) return true;
  return tuple[i] == idx.lift(x, region.name());
}

}  // namespace

StateTuple initial_tuple(std::string_view composite, const Statechart& sc) {
  StateIndex idx(sc);
  AndView v = and_view(composite, idx);
  StateTuple t;
  for (std::size_t i = 0; i < v.regions.size(); ++i)
    t.push_back(v.regions[i] ? v.regions[i]->initial
                             : v.and_state->regions[i].name());
  return t;
}

std::set<StateTuple> reachable_and(std::string_view composite,
                                   const StateTuple& start,
                                   const Statechart& sc,
                                   const PendingSet& pending,
                                   const RewriteOptions& options) {
  StateIndex idx(sc);
  AndView v = and_view(composite, idx);
  const std::size_t n = v.regions.size();
  if (start.size() != n)
    throw Error(ErrorCode::kNotSubstate, "start tuple has " +
                                             std::to_string(start.size()) +
                                             " coordinates, expected " +
                                             std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& region = v.and_state->regions[i].name();
    bool ok = v.regions[i] ? idx.parent(start[i]) == region &&
                                 idx.has_state(start[i])
                           : start[i] == region;
    if (!ok)
      throw Error(ErrorCode::kNotSubstate,
                  "'" + start[i] + "' is not a substate of region '" + region +
                      "'");
  }

  struct Step {
    const std::vector<std::string>* label;
    std::string from, to;
    const Condition* condition;
  };
  std::vector<std::vector<Step>> steps(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v.regions[i]) continue;
    const OrState& r = *v.regions[i];
    for (const Transition& t : r.transitions) {
      if (!options.pending_grants_reachability && pending.contains(t.name))
        continue;
      steps[i].push_back({&t.trigger, idx.lift(t.source, r.name),
                          idx.lift(t.target, r.name), &t.condition});
    }
  }

  std::set<StateTuple> seen = {start};
  std::deque<StateTuple> work = {start};
  while (!work.empty()) {
    StateTuple cur = work.front();
    work.pop_front();
    auto active = [&](const std::string& x) {
      return active_in(v, idx, cur, x);
    };
    std::set<std::vector<std::string>> labels;
    for (std::size_t i = 0; i < n; ++i)
      for (const Step& s : steps[i])
        if (s.from == cur[i] && instate_atoms_hold(*s.condition, active))
          labels.insert(*s.label);
    for (const auto& label : labels) {
      std::vector<std::vector<std::string>> choices(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (const Step& s : steps[i])
          if (s.from == cur[i] && *s.label == label &&
              instate_atoms_hold(*s.condition, active))
            choices[i].push_back(s.to);
        if (choices[i].empty()) choices[i].push_back(cur[i]);
      }
      // Cartesian product over the per-region choices.
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        StateTuple next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = choices[i][pick[i]];
        if (seen.insert(next).second) work.push_back(next);
        std::size_t i = 0;
        while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return seen;
}

Rewrite delete_and_state(std::string_view state, const Statechart& sc,
                         const PendingSet& pending,
                         const RewriteOptions& options) {
  StateIndex idx(sc);
  AndView v = and_view(state, idx);
  const StateTuple initials = initial_tuple(state, sc);
  std::map<StateTuple, std::set<StateTuple>> cache;

  auto pass = [&](const Transition& entry, const Transition& exit) {
    StateTuple start = initials;
    if (idx.is_descendant(entry.target, v.and_state->name)) {
      std::size_t i = region_of(v, idx, entry.target);
      const std::string& region = v.and_state->regions[i].name();
      if (entry.target != region && v.regions[i] != nullptr)
        start[i] = idx.lift(entry.target, region);
    }
    auto it = cache.find(start);
    if (it == cache.end())
      it = cache.emplace(start, reachable_and(state, start, sc, pending,
                                              options))
               .first;

    std::size_t j = v.regions.size();
    std::string wanted;
    if (idx.is_descendant(exit.source, v.and_state->name)) {
      j = region_of(v, idx, exit.source);
      const std::string& region = v.and_state->regions[j].name();
      if (exit.source != region && v.regions[j] != nullptr)
        wanted = idx.lift(exit.source, region);
    }
    for (const StateTuple& t : it->second) {
      if (!wanted.empty() && t[j] != wanted) continue;
      auto active = [&](const std::string& x) {
        return active_in(v, idx, t, x);
      };
      if (instate_atoms_hold(exit.condition, active)) return true;
    }
    return false;
  };
  return eliminate(state, sc, pending, idx, pass);
}

Rewrite delete_state(std::string_view state, const Statechart& sc,
                     const PendingSet& pending, const RewriteOptions& options) {
  StateIndex idx(sc);
  switch (require_state(idx, state).kind()) {
    case StateKind::kSimple: return delete_simple_state(state, sc, pending);
    case StateKind::kOr: return delete_or_state(state, sc, pending, options);
    case StateKind::kAnd: return delete_and_state(state, sc, pending, options);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown state kind");
}

Rewrite repair_initial(std::string_view composite, const Statechart& sc,
                       const PendingSet& pending) {
  StateIndex idx(sc);
  const OrState* o = require_state(idx, composite).as_or();
  if (o == nullptr)
    throw Error(ErrorCode::kInvalidInput,
                "state '" + std::string(composite) + "' is not an Or-state");
  const std::string& old = o->initial;
  if (!pending.contains(old))
    throw Error(ErrorCode::kInvalidInput,
                "initial '" + old + "' of '" + o->name + "' is not pending");

  std::vector<const Transition*> leaving;
  for (const Transition& t : o->transitions) {
    if (pending.contains(t.name)) continue;
    if (idx.lift(t.source, o->name) != old) continue;
    if (idx.lift(t.target, o->name) == old) continue;
    leaving.push_back(&t);
  }
  if (leaving.empty())
    throw Error(ErrorCode::kNoInitial, "initial '" + old + "' of '" + o->name +
                                           "' has no successor to take over");
  std::sort(leaving.begin(), leaving.end(),
            [](const Transition* a, const Transition* b) {
              return a->name < b->name;
            });
  auto survivor = std::find_if(leaving.begin(), leaving.end(),
                               [&](const Transition* t) {
                                 return !pending.contains(
                                     idx.lift(t->target, o->name));
                               });
  const Transition* chosen = survivor != leaving.end() ? *survivor : leaving[0];

  Rewrite r;
  r.machine = sc;
  find_state(r.machine.root, composite)->as_or()->initial =
      idx.lift(chosen->target, o->name);
  r.modified.push_back(o->name);
  return r;
}

Rewrite prune_conditions(std::string_view state, const Statechart& sc) {
  StateIndex idx(sc);
  Rewrite r;
  r.machine = sc;
  for_each_state_mut(r.machine.root, [&](State& s) {
    OrState* o = s.as_or();
    if (o == nullptr) return;
    for (Transition& t : o->transitions) {
      std::size_t before = t.condition.atoms.size();
      std::erase_if(t.condition.atoms, [&](const Atom& a) {
        const InState* in = std::get_if<InState>(&a);
        return in != nullptr && (in->state == state ||
                                 idx.is_descendant(in->state, state));
      });
      if (t.condition.atoms.size() != before) r.modified.push_back(t.name);
    }
  });
  return r;
}

Rewrite delete_transition(std::string_view transition, const Statechart& sc,
                          const PendingSet& pending) {
  (void)pending;
  Rewrite r;
  r.machine = sc;
  erase_transitions(r.machine, {std::string(transition)});
  r.removed.insert(std::string(transition));
  return r;
}

Statechart finalize_optionals(const Statechart& sc) {
  Statechart out = sc;
  for_each_state_mut(out.root, [](State& s) {
    s.set_optional(false);
    if (OrState* o = s.as_or())
      for (Transition& t : o->transitions) t.optional = false;
  });
  return out;
}

}  // namespace scstar
