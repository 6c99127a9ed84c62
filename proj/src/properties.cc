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

#include "scstar/properties.h"

#include "scstar/binding.h"
#include "scstar/feature_model.h"
#include "scstar/io.h"
#include "scstar/strategy.h"

namespace scstar {

PropertyReport check_properties(const ProductLine& pl,
                                const Configuration& conf,
                                std::size_t confluence_trials,
                                std::uint64_t seed) {
  PropertyReport report;
  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

  for (Violations vs : {validate_feature_model(pl.fm),
                        validate_configuration(pl.fm, conf),
                        check_well_formed(pl.sc),
                        validate_imp(pl.fm, pl.sc, pl.imp)})
    for (const Violation& v : vs) fail("invalid input: " + to_string(v));
  if (!report.ok()) return report;

  if (parse_product_line(serialize_product_line(pl)) != pl)
    fail("product line does not survive a serialization round trip");

  Instantiation inst;
  try {
    inst = instantiate(pl, conf);
  } catch (const Error& e) {
    fail(std::string("instantiation failed: ") + e.what());
    return report;
  }

  const Statechart& out = inst.machine;
  if (!var_elems(out).empty()) fail("result still has optional elements");
  for (const Violation& v : check_well_formed(out))
    fail("result is ill-formed: " + to_string(v));
  StateIndex after(out);
  for (const std::string& x : inst.nsc)
    if (after.has_state(x) || after.has_transition(x))
      fail("non-selected element '" + x + "' survived");
  for_each_state(pl.sc.root, [&](const State& s) {
    if (!s.optional() && !after.has_state(s.name())) {
      // Non-optional states inside a deleted composite go with it.
      StateIndex before(pl.sc);
      bool contained = false;
      for (const std::string& x : inst.nsc)
        contained = contained || before.is_descendant(s.name(), x);
      if (!contained) fail("kernel state '" + s.name() + "' was lost");
    }
  });
  if (inst.trace.steps.size() > trace_bound(pl.sc, inst.nsc, inst.trace))
    fail("trace of " + std::to_string(inst.trace.steps.size()) +
         " steps exceeds the termination bound");
  if (finalize_optionals(out) != out) fail("finalize is not idempotent");
  try {
    if (parse_statechart(serialize_statechart(out)) != out)
      fail("result does not survive a serialization round trip");
  } catch (const Error& e) {
    fail(std::string("result does not parse back: ") + e.what());
  }

  if (confluence_trials > 0) {
    ConfluenceReport c = check_confluence(pl, conf, confluence_trials, seed);
    if (!c.confluent)
      fail("rule orders diverge: " + std::to_string(c.distinct_outcomes) +
           " distinct outcomes");
  }
  return report;
}

}  // namespace scstar
