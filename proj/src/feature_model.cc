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

#include "scstar/feature_model.h"

#include <deque>
#include <map>

namespace scstar {

namespace {

struct Relation {
  std::string_view kind;
  const std::vector<FeatureGroup>* groups;
};

std::vector<Relation> relations(const FeatureModel& fm) {
  return {{"mand", &fm.mand}, {"opt", &fm.opt}, {"alt", &fm.alt},
          {"or", &fm.or_rel}};
}

std::string join(const NameSet& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return "{" + out + "}";
}

}  // namespace

Violations validate_feature_model(const FeatureModel& fm) {
  Violations out;
  for (const std::string& f : fm.funcs)
    if (!is_plain_identifier(f))
      out.push_back({"FM_NAME", f, "feature name is not a valid identifier"});
  if (!fm.funcs.contains(fm.root))
    out.push_back({"FM_ROOT", fm.root, "root is not a member of funcs"});

  std::map<std::string, int> child_count;
  std::map<std::string, NameSet> children_of;
  for (const Relation& rel : relations(fm)) {
    const bool singleton = rel.kind == "mand" || rel.kind == "opt";
    for (const FeatureGroup& g : *rel.groups) {
      std::string where = std::string(rel.kind) + " pair (" + g.parent +
                          ", " + join(g.children) + ")";
      if (!fm.funcs.contains(g.parent))
        out.push_back({"FM_UNKNOWN", g.parent, where + ": unknown parent"});
      for (const std::string& c : g.children) {
        if (!fm.funcs.contains(c))
          out.push_back({"FM_UNKNOWN", c, where + ": unknown child"});
        ++child_count[c];
        children_of[g.parent].insert(c);
      }
      if (singleton && g.children.size() != 1)
        out.push_back({"FM_CARDINALITY", g.parent,
                       where + ": mandatory and optional relations need "
                               "#sf = 1"});
      if (!singleton && g.children.size() < 2)
        out.push_back({"FM_GROUP_SIZE", g.parent,
                       where + ": alternative and or groups need at least "
                               "two children"});
    }
  }

  for (const auto& [child, n] : child_count) {
    if (child == fm.root)
      out.push_back({"FM_TREE", child, "root appears as a child"});
    else if (n > 1)
      out.push_back({"FM_TREE", child,
                     "feature has more than one parent relation"});
  }

  // Connectivity from the root.
  NameSet seen;
  std::deque<std::string> work;
  if (fm.funcs.contains(fm.root)) {
    work.push_back(fm.root);
    seen.insert(fm.root);
  }
  while (!work.empty()) {
    std::string f = work.front();
    work.pop_front();
    for (const std::string& c : children_of[f])
      if (seen.insert(c).second) work.push_back(c);
  }
  for (const std::string& f : fm.funcs) {
    if (seen.contains(f)) continue;
    if (!child_count.contains(f))
      out.push_back({"FM_TREE", f, "feature is not attached to the tree"});
    else if (child_count[f] == 1)
      out.push_back({"FM_TREE", f, "feature is not reachable from the root"});
  }
  return out;
}

Violations validate_configuration(const FeatureModel& fm,
                                  const Configuration& conf) {
  Violations out;
  const NameSet& sel = conf.selected;

  for (const std::string& f : sel)
    if (!fm.funcs.contains(f))
      out.push_back({"E_UNKNOWN_FEATURE", f, "selected feature is not in the "
                                             "feature model"});
  for (const FeatureGroup& e : conf.edges) {
    if (!fm.funcs.contains(e.parent))
      out.push_back(
          {"E_UNKNOWN_FEATURE", e.parent, "edge parent is not in the model"});
    for (const std::string& c : e.children)
      if (!fm.funcs.contains(c))
        out.push_back(
            {"E_UNKNOWN_FEATURE", c, "edge child is not in the model"});
  }

  if (!sel.contains(fm.root))
    out.push_back({"CONF_ROOT", fm.root, "root feature is not selected"});

  // R ⊆ F × (γ(F) − ∅), each edge restricting a relation of the model.
  std::map<std::string, std::vector<std::string>> edge_parents;
  for (const FeatureGroup& e : conf.edges) {
    std::string where = "edge (" + e.parent + ", " + join(e.children) + ")";
    if (e.children.empty())
      out.push_back({"CONF_EDGE", e.parent, where + " has no children"});
    if (!sel.contains(e.parent))
      out.push_back(
          {"CONF_EDGE", e.parent, where + ": parent is not selected"});
    for (const std::string& c : e.children) {
      if (!sel.contains(c))
        out.push_back({"CONF_EDGE", c, where + ": child is not selected"});
      edge_parents[c].push_back(e.parent);
    }
    bool restricts = false;
    for (const Relation& rel : relations(fm)) {
      for (const FeatureGroup& g : *rel.groups) {
        if (g.parent != e.parent || e.children.empty()) continue;
        if (std::includes(g.children.begin(), g.children.end(),
                          e.children.begin(), e.children.end()))
          restricts = true;
      }
    }
    if (!restricts && !e.children.empty())
      out.push_back({"CONF_EDGE", e.parent,
                     where + " does not restrict any relation of the model"});
  }

  auto has_edge_to = [&](const std::string& parent, const std::string& child) {
    for (const FeatureGroup& e : conf.edges)
      if (e.parent == parent && e.children.contains(child)) return true;
    return false;
  };

  // Selected features bring their mandatory children along.
  for (const FeatureGroup& g : fm.mand) {
    if (!sel.contains(g.parent)) continue;
    for (const std::string& c : g.children)
      if (!has_edge_to(g.parent, c))
        out.push_back({"CONF_MAND", c,
                       "mandatory child of selected '" + g.parent +
                           "' is missing"});
  }
  // Exactly one member of each alternative group under a selected parent.
  for (const FeatureGroup& g : fm.alt) {
    if (!sel.contains(g.parent)) continue;
    std::size_t chosen = 0;
    for (const std::string& c : g.children)
      if (sel.contains(c) && has_edge_to(g.parent, c)) ++chosen;
    if (chosen != 1)
      out.push_back({"CONF_ALT", g.parent,
                     "alternative group " + join(g.children) + " has " +
                         std::to_string(chosen) +
                         " selected members; #sf' = 1 required"});
  }
  // At least one member of each or-group under a selected parent.
  for (const FeatureGroup& g : fm.or_rel) {
    if (!sel.contains(g.parent)) continue;
    bool any = false;
    for (const std::string& c : g.children)
      any = any || (sel.contains(c) && has_edge_to(g.parent, c));
    if (!any)
      out.push_back({"CONF_OR", g.parent,
                     "or group " + join(g.children) +
                         " has no selected member; #sf' >= 1 required"});
  }

  // (F, R) is a tree rooted at the model root.
  for (const std::string& f : sel) {
    if (f == fm.root || !fm.funcs.contains(f)) continue;
    auto it = edge_parents.find(f);
    if (it == edge_parents.end())
      out.push_back({"CONF_TREE", f,
                     "selected feature is not connected to its parent"});
    else if (it->second.size() > 1)
      out.push_back({"CONF_TREE", f, "selected feature has several edges"});
  }
  if (edge_parents.contains(fm.root))
    out.push_back({"CONF_TREE", fm.root, "root appears as an edge child"});
  return out;
}

NameSet kernel(const FeatureModel& fm) {
  NameSet n = {fm.root};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const FeatureGroup& g : fm.mand) {
      if (!n.contains(g.parent)) continue;
      for (const std::string& c : g.children) grew |= n.insert(c).second;
    }
  }
  return n;
}

NameSet nsf(const FeatureModel& fm, const Configuration& conf) {
  NameSet out;
  for (const std::string& f : fm.funcs)
    if (!conf.selected.contains(f)) out.insert(f);
  return out;
}

Configuration canonical_configuration(const FeatureModel& fm,
                                      const NameSet& selected) {
  Configuration conf;
  conf.selected = selected;
  for (const auto* groups : {&fm.mand, &fm.opt, &fm.alt}) {
    for (const FeatureGroup& g : *groups) {
      if (!selected.contains(g.parent)) continue;
      for (const std::string& c : g.children)
        if (selected.contains(c)) conf.edges.insert({g.parent, {c}});
    }
  }
  for (const FeatureGroup& g : fm.or_rel) {
    if (!selected.contains(g.parent)) continue;
    FeatureGroup e{g.parent, {}};
    for (const std::string& c : g.children)
      if (selected.contains(c)) e.children.insert(c);
    if (!e.children.empty()) conf.edges.insert(std::move(e));
  }
  return conf;
}

std::set<Configuration> enumerate_configurations(const FeatureModel& fm,
                                                 std::size_t cap) {
  if (fm.funcs.size() > cap)
    throw Error(ErrorCode::kTooLarge,
                std::to_string(fm.funcs.size()) +
                    " features exceed the enumeration cap of " +
                    std::to_string(cap));
  std::vector<std::string> names(fm.funcs.begin(), fm.funcs.end());
  std::set<Configuration> out;
  const std::uint64_t total = std::uint64_t{1} << names.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    NameSet selected;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) selected.insert(names[i]);
    Configuration conf = canonical_configuration(fm, selected);
    if (validate_configuration(fm, conf).empty()) out.insert(std::move(conf));
  }
  return out;
}

}  // namespace scstar
