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

#include "scstar/model.h"

namespace scstar {

// Direct elements of `feature` plus, recursively, those of its includes.
// Unmapped features yield the empty set.
NameSet expand_imp(const ImpMapping& imp, const std::string& feature);

// Empty iff no kernel feature is mapped, every mapped feature exists, and
// every mapped element is an optional element of `sc`.
Violations validate_imp(const FeatureModel& fm, const Statechart& sc,
                        const ImpMapping& imp);

// Elements to eliminate: implemented by some deselected feature and not
// listed directly by any selected one.
NameSet nsc(const FeatureModel& fm, const Configuration& conf,
            const Statechart& sc, const ImpMapping& imp);

}  // namespace scstar
