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

// Seeded random product lines for property tests and fuzzing.

#pragma once

#include <cstdint>

#include "scstar/model.h"

namespace scstar {

struct GeneratorLimits {
  int max_depth = 3;      // nesting levels of the statechart, root included
  int max_substates = 4;  // per Or-state; And-states get 2..3 regions
  int max_features = 6;
};

struct GeneratedProductLine {
  ProductLine pl;
  Configuration conf;
};

// Mutually valid artifacts: a tree feature model, a valid configuration
// of it, a well-formed SC* and a binding that avoids the kernel. The same
// seed and limits always give the same result.
//
// Every Or-state keeps a surviving initial (an optional initial always has
// a non-optional transition to a non-optional sibling) and And regions are
// never optional, so instantiation cannot fail on these inputs.
GeneratedProductLine generate_random_product_line(
    std::uint64_t seed, const GeneratorLimits& limits = {});

}  // namespace scstar
