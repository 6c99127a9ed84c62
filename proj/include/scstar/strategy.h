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

// Instantiation of a concrete statechart from a product line and a
// configuration, by the layered rule schedule:
//
//   1. repair initials and prune "in X" conditions, to a fixpoint;
//   2. delete pending states;
//   3. delete pending transitions;
//   4. mark every survivor non-optional.
//
// Within layers 2 and 3 any order gives the same machine; the default
// order is ascending by name, and the confluence harness overrides it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scstar/model.h"
#include "scstar/rewrite.h"

namespace scstar {

struct InstantiateOptions {
  // Processing priority over the pending elements. Elements missing from
  // the list follow in ascending order. Empty means plain ascending order.
  std::vector<std::string> order;
  RewriteOptions rewrite;
};

struct Instantiation {
  Statechart machine;
  RewriteTrace trace;
  NameSet nsc;
};

// Throws E_INVALID_INPUT when any validator reports a violation, and
// passes on rule errors (E_NO_INITIAL, E_EMPTY_COMPOSITE, ...).
Instantiation instantiate(const FeatureModel& fm, const Configuration& conf,
                          const Statechart& sc, const ImpMapping& imp,
                          const InstantiateOptions& options = {});

inline Instantiation instantiate(const ProductLine& pl,
                                 const Configuration& conf,
                                 const InstantiateOptions& options = {}) {
  return instantiate(pl.fm, conf, pl.sc, pl.imp, options);
}

std::size_t count_or_states(const Statechart& sc);

// Number of transition conditions the pruning steps of `trace` changed.
std::size_t pruned_conditions(const RewriteTrace& trace);

// Upper bound on the length of an instantiation trace:
// |NSC| + |Or-states| + pruned conditions + 1.
std::size_t trace_bound(const Statechart& input, const NameSet& nsc,
                        const RewriteTrace& trace);

struct Divergence {
  std::vector<std::string> first_order;
  std::vector<std::string> second_order;
  std::string first_outcome;   // canonical serialization or error text
  std::string second_outcome;
};

struct ConfluenceReport {
  bool confluent = true;
  std::size_t trials = 0;
  std::size_t distinct_outcomes = 0;
  std::size_t longest_trace = 0;
  // Every trial stayed within trace_bound.
  bool bounded = true;
  std::optional<Divergence> divergence;
};

// Runs `trials` instantiations, each under a random permutation of the
// pending elements drawn from `seed`, and compares canonical results.
ConfluenceReport check_confluence(const ProductLine& pl,
                                  const Configuration& conf,
                                  std::size_t trials, std::uint64_t seed,
                                  const RewriteOptions& rewrite = {});

inline constexpr std::size_t kExhaustiveLimit = 8;

// Same, over every permutation of the pending elements. Throws
// E_TOO_LARGE above kExhaustiveLimit pending elements.
ConfluenceReport check_confluence_exhaustive(const ProductLine& pl,
                                             const Configuration& conf,
                                             const RewriteOptions& rewrite = {});

// Runs the given orders and compares their outcomes.
ConfluenceReport check_confluence_orders(
    const ProductLine& pl, const Configuration& conf,
    const std::vector<std::vector<std::string>>& orders,
    const RewriteOptions& rewrite = {});

}  // namespace scstar
