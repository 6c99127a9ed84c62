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

#pragma once

#include <cstddef>
#include <set>

#include "scstar/model.h"

namespace scstar {

// Tree shape, root membership, group cardinalities and disjoint child sets.
Violations validate_feature_model(const FeatureModel& fm);

// Conditions of a valid product over `fm`:
//   root selected; mandatory children of selected features present;
//   exactly one alternative chosen; at least one or-group member chosen;
//   every edge restricts a relation of `fm`; (F, R) is a tree.
// Names outside fm.funcs are reported as E_UNKNOWN_FEATURE violations.
Violations validate_configuration(const FeatureModel& fm,
                                  const Configuration& conf);

// Root plus the closure under mandatory relations.
NameSet kernel(const FeatureModel& fm);

// Features of `fm` that `conf` leaves out.
NameSet nsf(const FeatureModel& fm, const Configuration& conf);

// The configuration whose edges are rebuilt from `selected`: one edge per
// selected mandatory/optional/alternative child, one edge per or-group
// holding its selected members. The result may be invalid.
Configuration canonical_configuration(const FeatureModel& fm,
                                      const NameSet& selected);

inline constexpr std::size_t kDefaultEnumerationCap = 16;

// Every valid configuration in canonical form, by exhaustive search over
// feature subsets. Throws E_TOO_LARGE above `cap` features.
std::set<Configuration> enumerate_configurations(
    const FeatureModel& fm, std::size_t cap = kDefaultEnumerationCap);

}  // namespace scstar
