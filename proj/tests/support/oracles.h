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

// Independent reference implementations the library is checked against.
// They favour the most literal reading of each definition over speed.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "scstar/model.h"

namespace scstar::testing {

// Configuration validity read directly as constraints on a set of
// selected features.
bool is_valid_selection(const FeatureModel& fm, const NameSet& selected);

// Every subset of funcs accepted by is_valid_selection.
std::vector<NameSet> all_valid_selections(const FeatureModel& fm);

// Reflexive-transitive closure over the lifted internal transitions of an
// Or-state, computed with Warshall's algorithm.
NameSet closure_or(const Statechart& sc, const std::string& composite,
                   const std::string& from, const NameSet& pending);

// Reachable tuples of an And-state: the full product space is enumerated
// and the step relation iterated to a fixpoint.
std::set<std::vector<std::string>> closure_and(
    const Statechart& sc, const std::string& composite,
    const std::vector<std::string>& start, const NameSet& pending);

// Hand composition of a transition path: endpoints from the ends, every
// sequence concatenated in path order, history from the last step.
Transition compose_path(const std::vector<Transition>& path);

// A root holding one composite "E" with up to six substates (nested
// substates included) or up to three Or regions, plus a random pending
// subset of its transitions.
struct CompositeCase {
  Statechart sc;
  std::string composite;
  NameSet pending;
};
CompositeCase random_composite(std::uint64_t seed, bool and_state);

// A chain A -> E1 -> E2 -> B of non-optional transitions amid random
// extra transitions; E1 and E2 are optional and E1 is sometimes an
// Or-state entered by default.
struct PairCase {
  Statechart sc;
  std::vector<std::string> chain;  // names of the three chain transitions
};
PairCase random_pair_machine(std::uint64_t seed);

}  // namespace scstar::testing
