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

// The rebuilding rules that eliminate optional elements from an SC*.
//
// Every rule is a pure function: it takes a statechart and the set of
// element names still slated for deletion and returns a new statechart
// plus a summary of what changed. Callers shrink the pending set by
// `Rewrite::removed`.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scstar/model.h"

namespace scstar {

using PendingSet = NameSet;

struct RewriteOptions {
  // When set, transitions still pending deletion count towards composite
  // reachability, as a literal reading of the rules would have it.
  bool pending_grants_reachability = false;
};

struct Rewrite {
  Statechart machine;
  NameSet removed;                  // states and transitions that disappeared
  std::vector<std::string> added;   // composed transitions
  std::vector<std::string> modified;  // elements changed in place
};

// Original transition names a (possibly composed) name stands for.
std::vector<std::string> name_components(std::string_view name);
// "comp(a,b)", flattened so that both nestings of three names agree.
std::string composed_name(std::string_view first, std::string_view second);

// Sequential composition of an entry and an exit transition of a state
// being eliminated. Throws E_OPTIONAL_COMPOSE for optional inputs and
// E_INVALID_INPUT when t1 does not end where t2 starts.
Transition comp(const Transition& t1, const Transition& t2);

using TransitionPair = std::pair<Transition, Transition>;

// Non-optional entry/exit pairs of a simple state, skipping pending
// transitions. Throws E_NOT_SIMPLE for composites.
std::vector<TransitionPair> entry_exit_pairs(std::string_view state,
                                             const Statechart& sc,
                                             const PendingSet& pending);

Rewrite delete_simple_state(std::string_view state, const Statechart& sc,
                            const PendingSet& pending);

// Direct substates of Or-state `composite` reachable from `from` over its
// internal transitions (reflexive).
NameSet reachable_or(std::string_view composite, std::string_view from,
                     const Statechart& sc, const PendingSet& pending,
                     const RewriteOptions& options = {});

Rewrite delete_or_state(std::string_view state, const Statechart& sc,
                        const PendingSet& pending,
                        const RewriteOptions& options = {});

// One coordinate per region: the region's active direct substate, or the
// region itself when it is not an Or-state.
using StateTuple = std::vector<std::string>;

// Tuples reachable from `start` by synchronous product steps: each step
// fires one trigger in every region able to take it.
std::set<StateTuple> reachable_and(std::string_view composite,
                                   const StateTuple& start,
                                   const Statechart& sc,
                                   const PendingSet& pending,
                                   const RewriteOptions& options = {});

// The region initials, i.e. the tuple an And-state is entered in.
StateTuple initial_tuple(std::string_view composite, const Statechart& sc);

Rewrite delete_and_state(std::string_view state, const Statechart& sc,
                         const PendingSet& pending,
                         const RewriteOptions& options = {});

// Dispatches on the kind of `state`.
Rewrite delete_state(std::string_view state, const Statechart& sc,
                     const PendingSet& pending,
                     const RewriteOptions& options = {});

// Moves the initial of Or-state `composite` off a pending substate to the
// target of the least-named transition leaving it; surviving targets win
// over pending ones. Throws E_NO_INITIAL when there is no successor.
Rewrite repair_initial(std::string_view composite, const Statechart& sc,
                       const PendingSet& pending);

// Drops every "in X" atom where X is `state` or lies inside it.
Rewrite prune_conditions(std::string_view state, const Statechart& sc);

// Removes a transition; a no-op if it is already gone.
Rewrite delete_transition(std::string_view transition, const Statechart& sc,
                          const PendingSet& pending);

// Marks every remaining state and transition non-optional.
Statechart finalize_optionals(const Statechart& sc);

}  // namespace scstar
