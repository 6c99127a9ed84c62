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

#include "support/oracles.h"

#include <algorithm>
#include <map>
#include <random>

#include "support/builders.h"

namespace scstar::testing {

namespace {

struct Group {
  std::string parent;
  NameSet children;
  char kind;  // 'm'and, 'o'pt, 'a'lt, 'r' (or)
};

std::vector<Group> groups_of(const FeatureModel& fm) {
  std::vector<Group> out;
  for (const auto& g : fm.mand) out.push_back({g.parent, g.children, 'm'});
  for (const auto& g : fm.opt) out.push_back({g.parent, g.children, 'o'});
  for (const auto& g : fm.alt) out.push_back({g.parent, g.children, 'a'});
  for (const auto& g : fm.or_rel) out.push_back({g.parent, g.children, 'r'});
  return out;
}

// Parent links gathered by a plain walk, without StateIndex.
std::map<std::string, std::string> parents_of(const Statechart& sc) {
  std::map<std::string, std::string> out;
  auto walk = [&](auto&& self, const State& s) -> void {
    for (const State& c : s.children()) {
      out[c.name()] = s.name();
      self(self, c);
    }
  };
  walk(walk, sc.root);
  return out;
}

std::string lift_to(const std::map<std::string, std::string>& parents,
                    std::string x, const std::string& ancestor) {
  while (true) {
    auto it = parents.find(x);
    if (it == parents.end()) return "";
    if (it->second == ancestor) return x;
    x = it->second;
  }
}

const State* find(const State& s, const std::string& name) {
  if (s.name() == name) return &s;
  for (const State& c : s.children())
    if (const State* hit = find(c, name)) return hit;
  return nullptr;
}

}  // namespace

bool is_valid_selection(const FeatureModel& fm, const NameSet& selected) {
  if (!selected.contains(fm.root)) return false;
  std::map<std::string, std::string> parent;
  const std::vector<Group> groups = groups_of(fm);
  for (const Group& g : groups)
    for (const std::string& c : g.children) parent[c] = g.parent;
  for (const std::string& f : selected) {
    if (!fm.funcs.contains(f)) return false;
    if (f != fm.root && !selected.contains(parent[f])) return false;
  }
  for (const Group& g : groups) {
    if (!selected.contains(g.parent)) continue;
    const auto picked = std::count_if(
        g.children.begin(), g.children.end(),
        [&](const std::string& c) { return selected.contains(c); });
    if (g.kind == 'm' && picked != 1) return false;
    if (g.kind == 'a' && picked != 1) return false;
    if (g.kind == 'r' && picked < 1) return false;
  }
  return true;
}

std::vector<NameSet> all_valid_selections(const FeatureModel& fm) {
  const std::vector<std::string> names(fm.funcs.begin(), fm.funcs.end());
  std::vector<NameSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << names.size());
       ++mask) {
    NameSet s;
    for (std::size_t i = 0; i < names.size(); ++i)
      if ((mask >> i) & 1U) s.insert(names[i]);
    if (is_valid_selection(fm, s)) out.push_back(std::move(s));
  }
  return out;
}

NameSet closure_or(const Statechart& sc, const std::string& composite,
                   const std::string& from, const NameSet& pending) {
  const OrState& o = *find(sc.root, composite)->as_or();
  const auto parents = parents_of(sc);
  std::vector<std::string> direct;
  for (const State& s : o.substates) direct.push_back(s.name());
  const std::size_t n = direct.size();
  auto index = [&](const std::string& x) {
    return static_cast<std::size_t>(
        std::find(direct.begin(), direct.end(), x) - direct.begin());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const Transition& t : o.transitions) {
    if (pending.contains(t.name)) continue;
    reach[index(lift_to(parents, t.source, composite))]
         [index(lift_to(parents, t.target, composite))] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  NameSet out;
  const std::size_t f = index(from);
  for (std::size_t j = 0; j < n; ++j)
    if (reach[f][j]) out.insert(direct[j]);
  return out;
}

std::set<std::vector<std::string>> closure_and(
    const Statechart& sc, const std::string& composite,
    const std::vector<std::string>& start, const NameSet& pending) {
  const AndState& a = *find(sc.root, composite)->as_and();
  const auto parents = parents_of(sc);
  const std::size_t n = a.regions.size();

  auto inside = [&](std::string x) {
    for (auto it = parents.find(x); it != parents.end();
         it = parents.find(x)) {
      if (it->second == composite) return true;
      x = it->second;
    }
    return false;
  };
  auto holds = [&](const Condition& c, const std::vector<std::string>& u) {
    for (const Atom& atom : c.atoms) {
      const InState* in = std::get_if<InState>(&atom);
      if (in == nullptr || !inside(in->state)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& region = a.regions[i].name();
        if (in->state == region) break;
        const std::string d = lift_to(parents, in->state, region);
        if (d.empty()) continue;
        if (u[i] != d) return false;
        break;
      }
    }
    return true;
  };

  // Every tuple of the product space.
  std::vector<std::vector<std::string>> space = {{}};
  for (const State& r : a.regions) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : space)
      for (const State& s : r.as_or()->substates) {
        auto t = prefix;
        t.push_back(s.name());
        next.push_back(std::move(t));
      }
    space = std::move(next);
  }

  std::set<std::vector<std::string>> labels;
  for (const State& r : a.regions)
    for (const Transition& t : r.as_or()->transitions)
      labels.insert(t.trigger);

  std::map<std::vector<std::string>, std::set<std::vector<std::string>>> step;
  for (const auto& u : space) {
    for (const auto& label : labels) {
      std::vector<std::vector<std::string>> options(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        const OrState& r = *a.regions[i].as_or();
        for (const Transition& t : r.transitions) {
          if (pending.contains(t.name) || t.trigger != label) continue;
          if (lift_to(parents, t.source, r.name) != u[i] || !holds(t.condition, u))
            continue;
          options[i].push_back(lift_to(parents, t.target, r.name));
        }
        any = any || !options[i].empty();
        if (options[i].empty()) options[i].push_back(u[i]);
      }
      if (!any) continue;
      std::vector<std::vector<std::string>> succ = {{}};
      for (const auto& o : options) {
        std::vector<std::vector<std::string>> next;
        for (const auto& prefix : succ)
          for (const std::string& x : o) {
            auto t = prefix;
            t.push_back(x);
            next.push_back(std::move(t));
          }
        succ = std::move(next);
      }
      step[u].insert(succ.begin(), succ.end());
    }
  }

  std::set<std::vector<std::string>> reached = {start};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& u : std::set(reached))
      for (const auto& v : step[u]) grew = reached.insert(v).second || grew;
  }
  return reached;
}

Transition compose_path(const std::vector<Transition>& path) {
  Transition out;
  out.source = path.front().source;
  out.target = path.back().target;
  out.history = path.back().history;
  for (const Transition& t : path) {
    out.trigger.insert(out.trigger.end(), t.trigger.begin(), t.trigger.end());
    out.condition.atoms.insert(out.condition.atoms.end(),
                               t.condition.atoms.begin(),
                               t.condition.atoms.end());
    out.actions.insert(out.actions.end(), t.actions.begin(), t.actions.end());
  }
  return out;
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int between(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(g_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 g_;
};

std::vector<std::string> random_trigger(Rng& rng, int max_len) {
  static const std::vector<std::string> kEvents = {"a", "b", "c"};
  std::vector<std::string> out;
  for (int i = rng.between(1, max_len); i > 0; --i)
    out.push_back(rng.pick(kEvents));
  return out;
}

OrState random_flat_or(Rng& rng, const std::string& name, int size,
                       int& counter) {
  std::vector<State> subs;
  std::vector<std::string> names;
  for (int i = 1; i <= size; ++i) {
    names.push_back(name + "S" + std::to_string(i));
    subs.push_back(simple(names.back()));
  }
  std::vector<Transition> ts;
  for (int i = rng.between(0, 2 * size); i > 0; --i)
    ts.push_back(tr("t" + std::to_string(++counter), rng.pick(names),
                    rng.pick(names), random_trigger(rng, 1)));
  return or_state(name, rng.pick(names), std::move(subs), std::move(ts));
}

}  // namespace

CompositeCase random_composite(std::uint64_t seed, bool and_state_case) {
  Rng rng(seed);
  int counter = 0;
  CompositeCase out;
  out.composite = "E";
  State e = simple("E");
  if (!and_state_case) {
    const int k = rng.between(1, 6);
    OrState o = random_flat_or(rng, "E", k, counter);
    // Sometimes one substate becomes a composite of its own, so that
    // transitions can reach into it.
    if (k >= 2 && k <= 5 && rng.chance(0.5)) {
      const std::string host = o.substates[0].name();
      OrState nested = random_flat_or(rng, host, 6 - k, counter);
      std::vector<std::string> outer, inner;
      for (const State& s : o.substates) outer.push_back(s.name());
      for (const State& s : nested.substates) inner.push_back(s.name());
      o.substates[0] = std::move(nested);
      for (int i = rng.between(1, 3); i > 0; --i) {
        std::string from = rng.pick(inner);
        std::string to = rng.pick(outer);
        if (to == host) continue;
        if (rng.chance(0.5)) std::swap(from, to);
        o.transitions.push_back(
            tr("t" + std::to_string(++counter), from, to, random_trigger(rng, 1)));
      }
    }
    e = std::move(o);
  } else {
    AndState a;
    a.name = "E";
    const int regions = rng.between(2, 3);
    for (int r = 1; r <= regions; ++r)
      a.regions.push_back(random_flat_or(rng, "R" + std::to_string(r),
                                         rng.between(1, 6), counter));
    std::vector<std::string> targets = {"Out"};
    for (const State& r : a.regions) {
      targets.push_back(r.name());
      for (const State& s : r.children()) targets.push_back(s.name());
    }
    for (State& r : a.regions)
      for (Transition& t : r.as_or()->transitions)
        if (rng.chance(0.25))
          t.condition.atoms.push_back(InState{rng.pick(targets)});
    e = std::move(a);
  }
  out.sc = chart(or_state("Root", "Out", {simple("Out"), std::move(e)}));
  for_each_transition(out.sc, [&](const Transition& t, const OrState&) {
    if (rng.chance(0.2)) out.pending.insert(t.name);
  });
  return out;
}

PairCase random_pair_machine(std::uint64_t seed) {
  Rng rng(seed);
  static const std::vector<std::string> kEvents = {"a", "b", "c", "d"};
  int counter = 0;
  auto decorate = [&](Transition t) {
    t.trigger.clear();
    for (int i = rng.between(1, 2); i > 0; --i)
      t.trigger.push_back(rng.pick(kEvents));
    if (rng.chance(0.3))
      t.condition.atoms.push_back(Guard{"g" + std::to_string(++counter)});
    if (rng.chance(0.3)) t.condition.atoms.push_back(InState{"C"});
    if (rng.chance(0.5)) t.actions.push_back("act" + std::to_string(++counter));
    if (rng.chance(0.2)) t.history = History::kDeep;
    return t;
  };

  const bool composite = rng.chance(0.3);
  State e1 = simple("E1", true);
  if (composite)
    e1 = or_state("E1", "I1", {simple("I1"), simple("I2")},
                  {decorate(tr("ti", "I1", "I2"))}, true);

  std::vector<Transition> ts;
  ts.push_back(decorate(tr("tA", "A", "E1")));
  ts.push_back(decorate(
      tr("t12", composite && rng.chance(0.5) ? "I2" : "E1", "E2")));
  ts.push_back(decorate(tr("tB", "E2", "B")));
  const std::vector<std::string> top = {"A", "B", "C", "E1", "E2"};
  for (int i = rng.between(0, 5); i > 0; --i) {
    Transition t = decorate(tr("x" + std::to_string(i), rng.pick(top), rng.pick(top)));
    t.optional = rng.chance(0.3);
    ts.push_back(std::move(t));
  }
  PairCase out;
  out.sc = chart(or_state("Root", "A",
                          {simple("A"), simple("B"), simple("C"), std::move(e1),
                           simple("E2", true)},
                          std::move(ts)));
  out.chain = {"tA", "t12", "tB"};
  return out;
}

}  // namespace scstar::testing
