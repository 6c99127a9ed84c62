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

// The property pipeline run over generated product lines: validity of the
// inputs, the guarantees of instantiation and confluence of rule orders.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scstar/model.h"

namespace scstar {

struct PropertyReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

PropertyReport check_properties(const ProductLine& pl,
                                const Configuration& conf,
                                std::size_t confluence_trials,
                                std::uint64_t seed);

}  // namespace scstar
