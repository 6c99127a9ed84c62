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

#include "scstar/strategy.h"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "scstar/binding.h"
#include "scstar/feature_model.h"
#include "scstar/io.h"

namespace scstar {

namespace {

void require_valid(const FeatureModel& fm, const Configuration& conf,
                   const Statechart& sc, const ImpMapping& imp) {
  Violations all = validate_feature_model(fm);
  for (Violations more : {validate_configuration(fm, conf),
                          check_well_formed(sc), validate_imp(fm, sc, imp)})
    all.insert(all.end(), more.begin(), more.end());
  if (all.empty()) return;
  std::string message;
  bool unknown_feature = false;
  for (const Violation& v : all) {
    if (!message.empty()) message += "; ";
    message += to_string(v);
    unknown_feature = unknown_feature || v.code == "E_UNKNOWN_FEATURE";
  }
  throw Error(unknown_feature ? ErrorCode::kUnknownFeature
                              : ErrorCode::kInvalidInput,
              message);
}

// Sorts names by their position in the priority list, then by name.
class Priority {
 public:
  explicit Priority(const std::vector<std::string>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) rank_.emplace(order[i], i);
  }

  std::vector<std::string> sorted(const NameSet& names) const {
    std::vector<std::string> out(names.begin(), names.end());
    std::stable_sort(out.begin(), out.end(),
                     [&](const std::string& a, const std::string& b) {
                       return rank(a) < rank(b);
                     });
    return out;
  }

 private:
  std::size_t rank(const std::string& name) const {
    auto it = rank_.find(name);
    return it == rank_.end() ? std::numeric_limits<std::size_t>::max()
                             : it->second;
  }

  std::map<std::string, std::size_t> rank_;
};

class Run {
 public:
  Run(Statechart sc, NameSet pending, const InstantiateOptions& options)
      : machine_(std::move(sc)),
        pending_(std::move(pending)),
        priority_(options.order),
        options_(options) {
    StateIndex idx(machine_);
    std::size_t pending_states = 0;
    for (const std::string& x : pending_)
      if (idx.has_state(x)) ++pending_states;
    limit_ = pending_.size() + pending_states +
             count_or_states(machine_) * std::max<std::size_t>(1, pending_states) +
             1;
  }

  void layer_one() {
    StateIndex idx(machine_);
    for (const std::string& e : priority_.sorted(pending_states(idx))) {
      Rewrite r = prune_conditions(e, machine_);
      if (!r.modified.empty()) record("prune_conditions", e, std::move(r));
    }

    std::map<std::string, NameSet> seen;  // initials each Or-state has had
    for (bool changed = true; changed;) {
      changed = false;
      StateIndex now(machine_);
      for (const std::string& e : priority_.sorted(pending_states(now))) {
        const std::string& p = now.parent(e);
        const State* parent = now.state(p);
        if (parent == nullptr || parent->as_or() == nullptr) continue;
        if (parent->as_or()->initial != e || !survives(now, p)) continue;
        seen[p].insert(e);
        Rewrite r = repair_initial(p, machine_, pending_);
        const std::string next =
            StateIndex(r.machine).state(p)->as_or()->initial;
        if (seen[p].contains(next))
          throw Error(ErrorCode::kNoInitial,
                      "every successor of the initial of '" + p +
                          "' is slated for deletion");
        record("repair_initial", e, std::move(r));
        changed = true;
        break;
      }
    }
  }

  void layer_two() {
    while (true) {
      StateIndex idx(machine_);
      std::vector<std::string> ready;
      for (const std::string& e : pending_states(idx))
        if (!has_pending_ancestor(idx, e)) ready.push_back(e);
      if (ready.empty()) break;
      const std::string e = priority_.sorted(NameSet(ready.begin(), ready.end()))
                                .front();
      std::string rule;
      switch (idx.state(e)->kind()) {
        case StateKind::kSimple: rule = "delete_simple_state"; break;
        case StateKind::kOr: rule = "delete_or_state"; break;
        case StateKind::kAnd: rule = "delete_and_state"; break;
      }
      record(rule, e, delete_state(e, machine_, pending_, options_.rewrite));
    }
  }

  void layer_three() {
    StateIndex idx(machine_);
    for (const std::string& t : priority_.sorted(pending_)) {
      if (!idx.has_transition(t)) continue;
      record("delete_transition", t, delete_transition(t, machine_, pending_));
    }
    pending_.clear();
  }

  void layer_four() {
    TraceStep step{"finalize_optionals", "", {}, {}, {}};
    NameSet flipped = var_elems(machine_).all();
    step.modified.assign(flipped.begin(), flipped.end());
    machine_ = finalize_optionals(machine_);
    push(std::move(step));
  }

  void check_result() const {
    for (const Violation& v : check_well_formed(machine_)) {
      throw Error(v.code == "SC_EMPTY_OR" ? ErrorCode::kEmptyComposite
                                          : ErrorCode::kInvalidInput,
                  "instantiation produced an ill-formed statechart: " +
                      to_string(v));
    }
  }

  Statechart machine() && { return std::move(machine_); }
  RewriteTrace trace() && { return std::move(trace_); }

 private:
  NameSet pending_states(const StateIndex& idx) const {
    NameSet out;
    for (const std::string& x : pending_)
      if (idx.has_state(x)) out.insert(x);
    return out;
  }

  bool has_pending_ancestor(const StateIndex& idx, std::string_view s) const {
    for (std::string p = idx.parent(s); !p.empty(); p = idx.parent(p))
      if (pending_.contains(p)) return true;
    return false;
  }

  bool survives(const StateIndex& idx, const std::string& s) const {
    return !pending_.contains(s) && !has_pending_ancestor(idx, s);
  }

  void record(std::string rule, std::string subject, Rewrite r) {
    TraceStep step{std::move(rule), std::move(subject), std::move(r.added),
                   {r.removed.begin(), r.removed.end()}, std::move(r.modified)};
    for (const std::string& x : r.removed) pending_.erase(x);
    machine_ = std::move(r.machine);
    push(std::move(step));
  }

  void push(TraceStep step) {
    trace_.steps.push_back(std::move(step));
    if (trace_.steps.size() > limit_)
      throw Error(ErrorCode::kStepLimit,
                  "rewriting exceeded " + std::to_string(limit_) + " steps");
  }

  Statechart machine_;
  NameSet pending_;
  Priority priority_;
  const InstantiateOptions& options_;
  RewriteTrace trace_;
  std::size_t limit_ = 0;
};

struct Outcome {
  std::string text;
  std::size_t steps = 0;
  bool bounded = true;
};

Instantiation run_strategy(const Statechart& sc, NameSet pending,
                           const InstantiateOptions& options) {
  Run run(sc, pending, options);
  run.layer_one();
  run.layer_two();
  run.layer_three();
  run.layer_four();
  run.check_result();
  return {std::move(run).machine(), std::move(run).trace(), std::move(pending)};
}

// The inputs of a confluence check are validated once; every trial then
// only runs the strategy.
struct Prepared {
  const ProductLine& pl;
  NameSet pending;
  std::string invalid;  // error text when validation failed
};

Prepared prepare(const ProductLine& pl, const Configuration& conf) {
  Prepared p{pl, {}, {}};
  try {
    require_valid(pl.fm, conf, pl.sc, pl.imp);
    p.pending = nsc(pl.fm, conf, pl.sc, pl.imp);
  } catch (const Error& e) {
    p.invalid = std::string("error: ") + e.what();
  }
  return p;
}

Outcome run_order(const Prepared& p, const std::vector<std::string>& order,
                  const RewriteOptions& rewrite) {
  if (!p.invalid.empty()) return {p.invalid, 0, true};
  try {
    Instantiation inst = run_strategy(p.pl.sc, p.pending, {order, rewrite});
    return {canonical_text(inst.machine), inst.trace.steps.size(),
            inst.trace.steps.size() <= trace_bound(p.pl.sc, p.pending, inst.trace)};
  } catch (const Error& e) {
    return {std::string("error: ") + e.what(), 0, e.code() != ErrorCode::kStepLimit};
  }
}

class Tally {
 public:
  void add(const std::vector<std::string>& order, const Outcome& o) {
    ++report_.trials;
    report_.longest_trace = std::max(report_.longest_trace, o.steps);
    report_.bounded = report_.bounded && o.bounded;
    if (outcomes_.insert(o.text).second && outcomes_.size() > 1 &&
        !report_.divergence) {
      report_.divergence =
          Divergence{first_order_, order, first_outcome_, o.text};
    }
    if (report_.trials == 1) {
      first_order_ = order;
      first_outcome_ = o.text;
    }
  }

  ConfluenceReport finish() {
    report_.distinct_outcomes = outcomes_.size();
    report_.confluent = outcomes_.size() <= 1;
    return report_;
  }

 private:
  ConfluenceReport report_;
  NameSet outcomes_;
  std::vector<std::string> first_order_;
  std::string first_outcome_;
};

}  // namespace

Instantiation instantiate(const FeatureModel& fm, const Configuration& conf,
                          const Statechart& sc, const ImpMapping& imp,
                          const InstantiateOptions& options) {
  require_valid(fm, conf, sc, imp);
  return run_strategy(sc, nsc(fm, conf, sc, imp), options);
}

std::size_t count_or_states(const Statechart& sc) {
  std::size_t n = 0;
  for_each_state(sc.root, [&](const State& s) {
    if (s.kind() == StateKind::kOr) ++n;
  });
  return n;
}

std::size_t pruned_conditions(const RewriteTrace& trace) {
  std::size_t n = 0;
  for (const TraceStep& s : trace.steps)
    if (s.rule == "prune_conditions") n += s.modified.size();
  return n;
}

std::size_t trace_bound(const Statechart& input, const NameSet& nsc,
                        const RewriteTrace& trace) {
  return nsc.size() + count_or_states(input) + pruned_conditions(trace) + 1;
}

ConfluenceReport check_confluence_orders(
    const ProductLine& pl, const Configuration& conf,
    const std::vector<std::vector<std::string>>& orders,
    const RewriteOptions& rewrite) {
  const Prepared prepared = prepare(pl, conf);
  Tally tally;
  for (const std::vector<std::string>& order : orders)
    tally.add(order, run_order(prepared, order, rewrite));
  return tally.finish();
}

ConfluenceReport check_confluence(const ProductLine& pl,
                                  const Configuration& conf,
                                  std::size_t trials, std::uint64_t seed,
                                  const RewriteOptions& rewrite) {
  const Prepared prepared = prepare(pl, conf);
  const NameSet& pending = prepared.pending;
  std::vector<std::string> order(pending.begin(), pending.end());
  std::mt19937_64 rng(seed);
  Tally tally;
  for (std::size_t i = 0; i < trials; ++i) {
    // The first trial keeps the deterministic ascending order.
    if (i > 0) std::shuffle(order.begin(), order.end(), rng);
    tally.add(order, run_order(prepared, order, rewrite));
  }
  return tally.finish();
}

ConfluenceReport check_confluence_exhaustive(const ProductLine& pl,
                                             const Configuration& conf,
                                             const RewriteOptions& rewrite) {
  const Prepared prepared = prepare(pl, conf);
  const NameSet& pending = prepared.pending;
  if (pending.size() > kExhaustiveLimit)
    throw Error(ErrorCode::kTooLarge,
                std::to_string(pending.size()) +
                    " pending elements are too many to permute exhaustively");
  std::vector<std::string> order(pending.begin(), pending.end());
  Tally tally;
  do {
    tally.add(order, run_order(prepared, order, rewrite));
  } while (std::next_permutation(order.begin(), order.end()));
  return tally.finish();
}

}  // namespace scstar
