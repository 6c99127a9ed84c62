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

#include "scstar/binding.h"

#include "scstar/feature_model.h"

namespace scstar {

namespace {

void expand_into(const ImpMapping& imp, const std::string& feature,
                 NameSet& visiting, NameSet& out) {
  auto it = imp.entries.find(feature);
  if (it == imp.entries.end() || !visiting.insert(feature).second) return;
  out.insert(it->second.elements.begin(), it->second.elements.end());
  for (const std::string& inc : it->second.includes)
    expand_into(imp, inc, visiting, out);
}

bool reaches(const ImpMapping& imp, const std::string& from,
             const std::string& target, NameSet& seen) {
  auto it = imp.entries.find(from);
  if (it == imp.entries.end()) return false;
  for (const std::string& inc : it->second.includes) {
    if (inc == target) return true;
    if (seen.insert(inc).second && reaches(imp, inc, target, seen))
      return true;
  }
  return false;
}

}  // namespace

NameSet expand_imp(const ImpMapping& imp, const std::string& feature) {
  NameSet visiting, out;
  expand_into(imp, feature, visiting, out);
  return out;
}

Violations validate_imp(const FeatureModel& fm, const Statechart& sc,
                        const ImpMapping& imp) {
  Violations out;
  const NameSet core = kernel(fm);
  const NameSet variant = var_elems(sc).all();
  StateIndex idx(sc);

  for (const auto& [feature, entry] : imp.entries) {
    if (!fm.funcs.contains(feature))
      out.push_back({"IMP_UNKNOWN_FEATURE", feature,
                     "mapped feature is not in the feature model"});
    if (core.contains(feature))
      out.push_back({"IMP_KERNEL", feature,
                     "kernel features are always present and must not be "
                     "mapped"});
    for (const std::string& inc : entry.includes)
      if (!fm.funcs.contains(inc))
        out.push_back({"IMP_UNKNOWN_FEATURE", inc,
                       "included by '" + feature + "' but not in the model"});
    NameSet seen;
    if (reaches(imp, feature, feature, seen))
      out.push_back({"IMP_CYCLE", feature, "includes form a cycle"});
    if (expand_imp(imp, feature).empty())
      out.push_back({"IMP_EMPTY", feature, "feature maps to no elements"});
    for (const std::string& e : entry.elements) {
      if (!idx.has_state(e) && !idx.has_transition(e))
        out.push_back({"IMP_UNKNOWN_ELEMENT", e,
                       "mapped by '" + feature + "' but not in the statechart"});
      else if (!variant.contains(e))
        out.push_back({"IMP_NOT_VARIANT", e,
                       "mapped by '" + feature +
                           "' but not an optional element (VarElem)"});
    }
  }
  return out;
}

NameSet nsc(const FeatureModel& fm, const Configuration& conf,
            const Statechart& sc, const ImpMapping& imp) {
  const NameSet variant = var_elems(sc).all();
  NameSet kept;
  for (const std::string& f : conf.selected) {
    auto it = imp.entries.find(f);
    if (it != imp.entries.end())
      kept.insert(it->second.elements.begin(), it->second.elements.end());
  }
  NameSet out;
  for (const std::string& f : nsf(fm, conf))
    for (const std::string& x : expand_imp(imp, f))
      if (variant.contains(x) && !kept.contains(x)) out.insert(x);
  return out;
}

}  // namespace scstar
