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

#include "scstar/generator.h"

#include <algorithm>
#include <limits>
#include <random>

#include "scstar/feature_model.h"

namespace scstar {

namespace {

class Dice {
 public:
  explicit Dice(std::uint64_t seed) : rng_(seed) {}

  int between(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

FeatureModel random_feature_model(Dice& dice, int max_features) {
  FeatureModel fm;
  const int n = dice.between(1, std::max(1, max_features));
  std::vector<std::string> placed = {"F0"};
  fm.root = "F0";
  fm.funcs.insert("F0");
  int next = 1;
  while (next < n) {
    const std::string parent = dice.pick(placed);
    const int left = n - next;
    int kind = dice.between(0, 3);  // mand, opt, alt, or
    if (left < 2) kind = dice.between(0, 1);
    FeatureGroup g{parent, {}};
    const int size = kind < 2 ? 1 : dice.between(2, std::min(3, left));
    for (int i = 0; i < size; ++i) {
      std::string f = "F" + std::to_string(next++);
      g.children.insert(f);
      fm.funcs.insert(f);
      placed.push_back(f);
    }
    switch (kind) {
      case 0: fm.mand.push_back(std::move(g)); break;
      case 1: fm.opt.push_back(std::move(g)); break;
      case 2: fm.alt.push_back(std::move(g)); break;
      default: fm.or_rel.push_back(std::move(g)); break;
    }
  }
  return fm;
}

int first_child(const FeatureGroup& g) {
  int low = std::numeric_limits<int>::max();
  for (const std::string& c : g.children) low = std::min(low, std::stoi(c.substr(1)));
  return low;
}

// Groups are decided in creation order, so every parent is settled before
// its children are considered.
Configuration random_configuration(Dice& dice, const FeatureModel& fm) {
  struct Group {
    const FeatureGroup* group;
    int kind;  // mand, opt, alt, or
  };
  std::vector<Group> groups;
  int kind = 0;
  for (const auto* v : {&fm.mand, &fm.opt, &fm.alt, &fm.or_rel}) {
    for (const FeatureGroup& g : *v) groups.push_back({&g, kind});
    ++kind;
  }
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return first_child(*a.group) < first_child(*b.group);
  });

  NameSet selected = {fm.root};
  for (const auto& [g, k] : groups) {
    if (!selected.contains(g->parent)) continue;
    std::vector<std::string> kids(g->children.begin(), g->children.end());
    std::vector<std::string> take;
    if (k == 0 || (k == 1 && dice.chance(0.5))) take = kids;
    if (k == 2) take = {dice.pick(kids)};
    if (k == 3) {
      for (const std::string& c : kids)
        if (dice.chance(0.5)) take.push_back(c);
      if (take.empty()) take = {dice.pick(kids)};
    }
    selected.insert(take.begin(), take.end());
  }
  return canonical_configuration(fm, selected);
}

class ChartBuilder {
 public:
  ChartBuilder(Dice& dice, const GeneratorLimits& limits)
      : dice_(dice), limits_(limits) {}

  Statechart build() {
    Statechart sc{or_state("Root", 1)};
    StateIndex idx(sc);
    for_each_state(sc.root, [&](const State& s) { all_.push_back(s.name()); });
    for_each_state_mut(sc.root, [&](State& s) {
      if (OrState* o = s.as_or()) add_transitions(*o, idx);
    });
    return sc;
  }

 private:
  std::string state_name() { return "S" + std::to_string(++states_); }
  std::string transition_name() { return "T" + std::to_string(++transitions_); }

  OrState or_state(std::string name, int depth) {
    OrState o;
    o.name = std::move(name);
    const int k = dice_.between(1, std::max(1, limits_.max_substates));
    for (int i = 0; i < k; ++i) {
      State child = child_state(depth + 1);
      child.set_optional(dice_.chance(0.4));
      o.substates.push_back(std::move(child));
    }
    if (std::all_of(o.substates.begin(), o.substates.end(),
                    [](const State& s) { return s.optional(); }))
      o.substates[static_cast<std::size_t>(
                      dice_.between(0, k - 1))]
          .set_optional(false);
    o.initial = o.substates[static_cast<std::size_t>(dice_.between(0, k - 1))]
                    .name();
    return o;
  }

  State child_state(int depth) {
    // An And-state and its regions share one level.
    if (depth + 1 <= limits_.max_depth && dice_.chance(0.3)) {
      if (dice_.chance(0.35)) {
        AndState a;
        a.name = state_name();
        const int regions = dice_.between(2, 3);
        for (int i = 0; i < regions; ++i)
          a.regions.push_back(or_state(state_name(), depth));
        return a;
      }
      return or_state(state_name(), depth);
    }
    return make_simple(state_name());
  }

  // A direct substate, or now and then a state nested inside one.
  std::string endpoint(const OrState& o, const StateIndex& idx) {
    const std::string& direct = dice_.pick(o.substates).name();
    if (!dice_.chance(0.2)) return direct;
    NameSet inside = idx.subtree(direct);
    std::vector<std::string> v(inside.begin(), inside.end());
    return dice_.pick(v);
  }

  Transition random_transition(const std::string& source,
                               const std::string& target) {
    static const std::vector<std::string> kEvents = {"a", "b", "c", "d"};
    Transition t;
    t.name = transition_name();
    t.source = source;
    t.target = target;
    const int events = dice_.between(1, 2);
    for (int i = 0; i < events; ++i) t.trigger.push_back(dice_.pick(kEvents));
    if (dice_.chance(0.2))
      t.condition.atoms.push_back(Guard{"g" + std::to_string(dice_.between(1, 3))});
    if (dice_.chance(0.2)) t.condition.atoms.push_back(InState{dice_.pick(all_)});
    if (dice_.chance(0.3))
      t.actions.push_back("act" + std::to_string(dice_.between(1, 3)));
    if (dice_.chance(0.1))
      t.history = dice_.chance(0.5) ? History::kShallow : History::kDeep;
    t.optional = dice_.chance(0.3);
    return t;
  }

  void add_transitions(OrState& o, const StateIndex& idx) {
    // An optional initial needs a way out that survives every
    // configuration, so the initial can always be handed on.
    for (const State& s : o.substates) {
      if (s.name() != o.initial || !s.optional()) continue;
      std::vector<std::string> stable;
      for (const State& c : o.substates)
        if (!c.optional()) stable.push_back(c.name());
      Transition t = random_transition(o.initial, dice_.pick(stable));
      t.optional = false;
      o.transitions.push_back(std::move(t));
    }
    const int n = dice_.between(0, 2 * static_cast<int>(o.substates.size()));
    for (int i = 0; i < n; ++i) {
      std::string source = endpoint(o, idx);
      std::string target = endpoint(o, idx);
      if (source != target &&
          idx.lift(source, o.name) == idx.lift(target, o.name))
        continue;
      if (source == target && idx.parent(source) != o.name) continue;
      o.transitions.push_back(random_transition(source, target));
    }
  }

  Dice& dice_;
  const GeneratorLimits& limits_;
  std::vector<std::string> all_;
  int states_ = 0;
  int transitions_ = 0;
};

ImpMapping random_imp(Dice& dice, const FeatureModel& fm,
                      const Statechart& sc) {
  const NameSet core = kernel(fm);
  std::vector<std::string> variable;
  for (const std::string& f : fm.funcs)
    if (!core.contains(f)) variable.push_back(f);
  ImpMapping imp;
  if (variable.empty()) return imp;

  for (const std::string& e : var_elems(sc).all()) {
    if (!dice.chance(0.85)) continue;
    imp.entries[dice.pick(variable)].elements.insert(e);
    if (dice.chance(0.15)) imp.entries[dice.pick(variable)].elements.insert(e);
  }
  // Includes only run from a feature to one of its children, which keeps
  // them acyclic.
  for (const auto* groups : {&fm.opt, &fm.alt, &fm.or_rel}) {
    for (const FeatureGroup& g : *groups) {
      auto parent = imp.entries.find(g.parent);
      if (parent == imp.entries.end()) continue;
      for (const std::string& c : g.children)
        if (imp.entries.contains(c) && dice.chance(0.2))
          parent->second.includes.insert(c);
    }
  }
  return imp;
}

}  // namespace

GeneratedProductLine generate_random_product_line(
    std::uint64_t seed, const GeneratorLimits& limits) {
  Dice dice(seed);
  GeneratedProductLine out;
  out.pl.fm = random_feature_model(dice, limits.max_features);
  out.conf = random_configuration(dice, out.pl.fm);
  out.pl.sc = ChartBuilder(dice, limits).build();
  out.pl.imp = random_imp(dice, out.pl.fm, out.pl.sc);
  return out;
}

}  // namespace scstar
