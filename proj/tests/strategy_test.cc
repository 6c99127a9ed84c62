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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "scstar/binding.h"
#include "scstar/feature_model.h"
#include "scstar/generator.h"
#include "scstar/io.h"
#include "scstar/properties.h"
#include "scstar/strategy.h"
#include "support/builders.h"

namespace scstar {
namespace {

using testing::and_state;
using testing::chart;
using testing::opt_tr;
using testing::or_state;
using testing::simple;
using testing::state_names;
using testing::tr;
using testing::transition_names;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct MobilePhone {
  ProductLine pl = parse_product_line(slurp(SCSTAR_DATA_DIR "/mp.pl.json"));
  Configuration conf =
      parse_configuration(slurp(SCSTAR_DATA_DIR "/mp-no-poly.conf.json"));
};

std::vector<std::string> steps_of(const RewriteTrace& trace) {
  std::vector<std::string> out;
  for (const TraceStep& s : trace.steps)
    out.push_back(s.subject.empty() ? s.rule : s.rule + "(" + s.subject + ")");
  return out;
}

// Root feature R with one optional child f owning every listed element.
ProductLine single_feature_line(Statechart sc, NameSet elements) {
  ProductLine pl;
  pl.fm = FeatureModel{{"R", "f"}, "R", {}, {{"R", {"f"}}}, {}, {}};
  pl.sc = std::move(sc);
  pl.imp.entries["f"] = {std::move(elements), {}};
  return pl;
}

const Configuration kWithoutF{{"R"}, {}};

template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidInput;
}

TEST(Instantiate, MobilePhoneGoldenTrace) {
  MobilePhone mp;
  Instantiation inst = instantiate(mp.pl, mp.conf);
  EXPECT_EQ(steps_of(inst.trace),
            (std::vector<std::string>{
                "prune_conditions(MessagesState)",
                "delete_simple_state(MessagesState)",
                "delete_simple_state(SelectPolSound)",
                "delete_simple_state(ToChoosePolSound)",
                "delete_transition(TMessage-MainDisplay-IncomingMess)",
                "finalize_optionals"}));
  EXPECT_TRUE(var_elems(inst.machine).empty());
  EXPECT_TRUE(check_well_formed(inst.machine).empty());
  const NameSet states = state_names(inst.machine);
  const NameSet transitions = transition_names(inst.machine);
  for (const std::string& x : inst.nsc) {
    EXPECT_FALSE(states.contains(x)) << x;
    EXPECT_FALSE(transitions.contains(x)) << x;
  }
  EXPECT_EQ(inst.nsc.size(), 8u);
  // Selected features keep their elements.
  EXPECT_TRUE(states.contains("SelectImage"));
  EXPECT_TRUE(states.contains("MessagesCenter"));
  EXPECT_TRUE(transitions.contains("TLeft-SelectVideo-MultimediaType"));
}

TEST(Instantiate, PriorityOrderChangesTheTraceButNotTheResult) {
  MobilePhone mp;
  InstantiateOptions reversed;
  reversed.order = {"ToChoosePolSound", "SelectPolSound", "MessagesState"};
  Instantiation a = instantiate(mp.pl, mp.conf);
  Instantiation b = instantiate(mp.pl, mp.conf, reversed);
  EXPECT_EQ(steps_of(b.trace)[1], "delete_simple_state(ToChoosePolSound)");
  EXPECT_EQ(canonical_text(a.machine), canonical_text(b.machine));
}

TEST(Instantiate, SelectingEverythingOnlyFinalizes) {
  MobilePhone mp;
  Configuration all = canonical_configuration(mp.pl.fm, mp.pl.fm.funcs);
  Instantiation inst = instantiate(mp.pl, all);
  ASSERT_EQ(inst.trace.steps.size(), 1u);
  EXPECT_EQ(inst.trace.steps[0].rule, "finalize_optionals");
  EXPECT_EQ(inst.machine, finalize_optionals(mp.pl.sc));
}

TEST(Instantiate, SecondApplicationIsTheIdentity) {
  MobilePhone mp;
  Instantiation once = instantiate(mp.pl, mp.conf);
  ProductLine again{mp.pl.fm, once.machine, {}};
  Instantiation twice = instantiate(again, mp.conf);
  EXPECT_EQ(twice.machine, once.machine);
  EXPECT_EQ(twice.trace.steps.size(), 1u);
}

TEST(Instantiate, RepairsAPendingInitialFirst) {
  Statechart sc = chart(or_state(
      "Root", "E", {simple("E", true), simple("B"), simple("C")},
      {tr("t1", "E", "B"), tr("t2", "C", "E")}));
  Instantiation inst = instantiate(single_feature_line(sc, {"E"}), kWithoutF);
  EXPECT_EQ(steps_of(inst.trace),
            (std::vector<std::string>{"repair_initial(E)",
                                      "delete_simple_state(E)",
                                      "finalize_optionals"}));
  EXPECT_EQ(inst.machine.root.as_or()->initial, "B");
  EXPECT_EQ(transition_names(inst.machine), NameSet{"comp(t2,t1)"});
}

TEST(Instantiate, ChainedInitialRepair) {
  Statechart sc = chart(or_state(
      "Root", "s1", {simple("s1", true), simple("s2", true), simple("s3")},
      {tr("t1", "s1", "s2"), tr("t2", "s2", "s3")}));
  Instantiation inst =
      instantiate(single_feature_line(sc, {"s1", "s2"}), kWithoutF);
  EXPECT_EQ(inst.machine.root.as_or()->initial, "s3");
  EXPECT_TRUE(check_well_formed(inst.machine).empty());
}

TEST(Instantiate, NoSurvivingInitial) {
  Statechart cycle = chart(or_state(
      "Root", "s1", {simple("s1", true), simple("s2", true), simple("s3")},
      {tr("t1", "s1", "s2"), tr("t2", "s2", "s1")}));
  EXPECT_EQ(error_of([&] {
              instantiate(single_feature_line(cycle, {"s1", "s2"}), kWithoutF);
            }),
            ErrorCode::kNoInitial);
  Statechart stuck = chart(or_state("Root", "s1", {simple("s1", true), simple("s2")}));
  EXPECT_EQ(error_of([&] {
              instantiate(single_feature_line(stuck, {"s1"}), kWithoutF);
            }),
            ErrorCode::kNoInitial);
}

TEST(Instantiate, DeletingARegionOfAPairIsRejected) {
  Statechart sc = chart(or_state(
      "Root", "On",
      {and_state("On", {or_state("R1", "A", {simple("A")}, {}, true),
                        or_state("R2", "X", {simple("X")})})}));
  EXPECT_EQ(error_of([&] {
              instantiate(single_feature_line(sc, {"R1"}), kWithoutF);
            }),
            ErrorCode::kEmptyComposite);
}

TEST(Instantiate, InvalidInputsAreRejected) {
  Statechart sc = chart(or_state("Root", "A", {simple("A"), simple("E", true)}));
  ProductLine pl = single_feature_line(sc, {"E"});
  EXPECT_EQ(error_of([&] { instantiate(pl, Configuration{{"R", "f"}, {}}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([&] {
              instantiate(pl, Configuration{{"R", "Ghost"}, {{"R", {"Ghost"}}}});
            }),
            ErrorCode::kUnknownFeature);
  ProductLine bad = pl;
  bad.imp.entries["f"].elements.insert("A");
  EXPECT_EQ(error_of([&] { instantiate(bad, kWithoutF); }),
            ErrorCode::kInvalidInput);
}

TEST(Instantiate, NestedPendingStatesGoWithTheirAncestor) {
  Statechart sc = chart(or_state(
      "Root", "X",
      {simple("X"), simple("Y"),
       or_state("E", "A", {simple("A", true), simple("B")},
                {tr("ab", "A", "B")}, true)},
      {tr("in", "X", "E"), tr("out", "B", "Y")}));
  Instantiation inst = instantiate(single_feature_line(sc, {"E", "A"}), kWithoutF);
  EXPECT_EQ(steps_of(inst.trace),
            (std::vector<std::string>{"delete_or_state(E)", "finalize_optionals"}));
  EXPECT_EQ(transition_names(inst.machine), NameSet{"comp(in,out)"});
}

TEST(Instantiate, LiteralReadingLetsPendingTransitionsConnect) {
  Statechart sc = chart(or_state(
      "Root", "X",
      {simple("X"), simple("Y"),
       or_state("E", "A", {simple("A"), simple("B")}, {opt_tr("ab", "A", "B")}, true)},
      {tr("in", "X", "A"), tr("out", "B", "Y")}));
  ProductLine pl = single_feature_line(sc, {"E", "ab"});
  EXPECT_TRUE(transition_names(instantiate(pl, kWithoutF).machine).empty());
  InstantiateOptions literal;
  literal.rewrite.pending_grants_reachability = true;
  EXPECT_EQ(transition_names(instantiate(pl, kWithoutF, literal).machine),
            NameSet{"comp(in,out)"});
}

TEST(Confluence, SingleTrialIsTriviallyConfluent) {
  MobilePhone mp;
  ConfluenceReport r = check_confluence(mp.pl, mp.conf, 1, 3);
  EXPECT_TRUE(r.confluent);
  EXPECT_EQ(r.trials, 1u);
}

TEST(Confluence, MobilePhoneUnderShuffledOrders) {
  MobilePhone mp;
  ConfluenceReport r = check_confluence(mp.pl, mp.conf, 200, 7);
  EXPECT_TRUE(r.confluent);
  EXPECT_EQ(r.distinct_outcomes, 1u);
  EXPECT_TRUE(r.bounded);
  EXPECT_FALSE(r.divergence.has_value());
  ConfluenceReport all = check_confluence_exhaustive(mp.pl, mp.conf);
  EXPECT_TRUE(all.confluent);
  EXPECT_EQ(all.trials, 40320u);
}

TEST(Confluence, ExhaustiveCapIsEnforced) {
  Statechart sc = chart(or_state("Root", "A", {simple("A")}));
  OrState& root = *sc.root.as_or();
  NameSet elements;
  for (int i = 0; i < 9; ++i) {
    root.transitions.push_back(opt_tr("t" + std::to_string(i), "A", "A"));
    elements.insert("t" + std::to_string(i));
  }
  EXPECT_EQ(error_of([&] {
              check_confluence_exhaustive(single_feature_line(sc, elements),
                                          kWithoutF);
            }),
            ErrorCode::kTooLarge);
}

TEST(Confluence, ExplicitOrdersAreCounted) {
  MobilePhone mp;
  ConfluenceReport r = check_confluence_orders(
      mp.pl, mp.conf, {{"MessagesState"}, {"SelectPolSound"}, {}});
  EXPECT_TRUE(r.confluent);
  EXPECT_EQ(r.trials, 3u);
  EXPECT_EQ(r.longest_trace, 6u);
}

TEST(Bounds, TraceBoundCountsPrunedConditions) {
  MobilePhone mp;
  Instantiation inst = instantiate(mp.pl, mp.conf);
  EXPECT_EQ(pruned_conditions(inst.trace), 1u);
  EXPECT_EQ(count_or_states(mp.pl.sc), 4u);
  EXPECT_EQ(trace_bound(mp.pl.sc, inst.nsc, inst.trace), 8u + 4u + 1u + 1u);
  EXPECT_LE(inst.trace.steps.size(), trace_bound(mp.pl.sc, inst.nsc, inst.trace));
}

class GeneratedLines : public ::testing::TestWithParam<int> {};

TEST_P(GeneratedLines, PropertiesHold) {
  const GeneratedProductLine g = generate_random_product_line(GetParam());
  const PropertyReport r = check_properties(g.pl, g.conf, 10, GetParam());
  for (const std::string& f : r.failures) ADD_FAILURE() << f;

  const Instantiation inst = instantiate(g.pl, g.conf);
  NameSet pending = inst.nsc;
  for (const TraceStep& s : inst.trace.steps) {
    if (s.rule.starts_with("delete_")) {
      const std::size_t before = pending.size();
      for (const std::string& x : s.removed) pending.erase(x);
      EXPECT_LT(pending.size(), before) << s.rule << " " << s.subject;
    }
  }
  // Re-instantiating the product changes nothing.
  ProductLine again{g.pl.fm, inst.machine, {}};
  EXPECT_EQ(instantiate(again, g.conf).machine, inst.machine);
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedLines, ::testing::Range(1, 101));

}  // namespace
}  // namespace scstar
