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

// JSON documents for product lines, configurations, statecharts and
// traces, plus Graphviz export.
//
// Product line document:
//
//   {
//     "feature_model": {"funcs": [...], "root": "F",
//                       "mand": [{"parent": "F", "children": ["G"]}, ...],
//                       "opt": [...], "alt": [...], "or": [...]},
//     "statechart": <state>,
//     "imp": {"G": {"elements": [...], "includes": [...]}}
//   }
//
//   <state> = {"kind": "simple", "name": ..., "optional": bool}
//           | {"kind": "or", "name", "optional", "initial",
//              "substates": [<state>...], "transitions": [<transition>...]}
//           | {"kind": "and", "name", "optional", "regions": [<state>...]}
//
//   <transition> = {"name", "source", "target", "trigger": [...],
//                   "condition": [{"guard": "..."} | {"in": "S"}],
//                   "actions": [...], "history": "none|shallow|deep",
//                   "optional": bool, "via": [...]}
//
// "condition", "actions", "history", "optional", "via" and "includes" may
// be omitted on input. State references may be dotted paths
// ("Outer.Inner.Leaf"); output always uses plain names.

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "scstar/model.h"

namespace scstar {

// Throws SyntaxError (E_SYNTAX) for malformed JSON or schema mismatches,
// Error E_DUPLICATE_NAME and E_UNKNOWN_REFERENCE for broken names.
// Semantic validation is left to the validators.
// Product line files carry a "feature_model" key; anything else is read as
// a statechart document.
bool is_product_line_document(std::string_view text);

ProductLine parse_product_line(std::string_view text);
std::string serialize_product_line(const ProductLine& pl);

Configuration parse_configuration(std::string_view text);
std::string serialize_configuration(const Configuration& conf);

// Document {"statechart": <state>}.
Statechart parse_statechart(std::string_view text);
std::string serialize_statechart(const Statechart& sc);

std::string serialize_trace(const RewriteTrace& trace);

nlohmann::ordered_json to_json(const Statechart& sc);
nlohmann::ordered_json to_json(const FeatureModel& fm);
nlohmann::ordered_json to_json(const Configuration& conf);
nlohmann::ordered_json to_json(const ImpMapping& imp);
nlohmann::ordered_json to_json(const RewriteTrace& trace);
nlohmann::ordered_json to_json(const Violations& violations);

// Canonical text of a statechart: sorted, compact. Equal machines under
// canonicalize() give equal text.
std::string canonical_text(const Statechart& sc);

// Graphviz digraph: composite states as clusters, optional elements
// dashed, initial substates marked by a point node, edges labelled
// "trigger, [condition] / actions". Output is sorted by name.
std::string export_dot(const Statechart& sc);

// Human-readable transition label, "e1::e2, [in S && g] / a1::a2".
std::string transition_label(const Transition& t);

}  // namespace scstar
