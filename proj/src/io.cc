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

#include "scstar/io.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace scstar {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Reading

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos)
      what = what.substr(pos);
    throw SyntaxError(what, line, column);
  }
}

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& message) {
  throw SyntaxError(path + ": " + message, 0, 0);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_of(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(string_of(j[i], path + "/" + std::to_string(i)));
  return out;
}

bool bool_or(const Json& obj, const char* key, bool fallback,
             const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) schema_error(path + "/" + key, "expected a boolean");
  return it->get<bool>();
}

std::vector<std::string> strings_or_empty(const Json& obj, const char* key,
                                          const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  return strings_of(*it, path + "/" + key);
}

History history_of(const Json& obj, const std::string& path) {
  auto it = obj.find("history");
  if (it == obj.end()) return History::kNone;
  std::string h = string_of(*it, path + "/history");
  if (h == "none") return History::kNone;
  if (h == "shallow") return History::kShallow;
  if (h == "deep") return History::kDeep;
  schema_error(path + "/history", "unknown history type '" + h + "'");
}

Condition condition_of(const Json& obj, const std::string& path) {
  Condition c;
  auto it = obj.find("condition");
  if (it == obj.end()) return c;
  if (!it->is_array()) schema_error(path + "/condition", "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const Json& a = (*it)[i];
    std::string p = path + "/condition/" + std::to_string(i);
    if (a.is_object() && a.size() == 1 && a.contains("guard"))
      c.atoms.push_back(Guard{string_of(a["guard"], p + "/guard")});
    else if (a.is_object() && a.size() == 1 && a.contains("in"))
      c.atoms.push_back(InState{string_of(a["in"], p + "/in")});
    else
      schema_error(p, "atom must be {\"guard\": ...} or {\"in\": ...}");
  }
  return c;
}

Transition transition_of(const Json& j, const std::string& path) {
  Transition t;
  t.name = string_of(field(j, "name", path), path + "/name");
  t.source = string_of(field(j, "source", path), path + "/source");
  t.target = string_of(field(j, "target", path), path + "/target");
  t.trigger = strings_of(field(j, "trigger", path), path + "/trigger");
  t.condition = condition_of(j, path);
  t.actions = strings_or_empty(j, "actions", path);
  t.history = history_of(j, path);
  t.optional = bool_or(j, "optional", false, path);
  t.via = strings_or_empty(j, "via", path);
  return t;
}

State state_of(const Json& j, const std::string& path) {
  std::string kind = string_of(field(j, "kind", path), path + "/kind");
  std::string name = string_of(field(j, "name", path), path + "/name");
  bool optional = bool_or(j, "optional", false, path);
  if (kind == "simple") return SimpleState{name, optional};
  if (kind == "or") {
    OrState o;
    o.name = name;
    o.optional = optional;
    o.initial = string_of(field(j, "initial", path), path + "/initial");
    const Json& subs = field(j, "substates", path);
    if (!subs.is_array()) schema_error(path + "/substates", "expected an array");
    for (std::size_t i = 0; i < subs.size(); ++i)
      o.substates.push_back(
          state_of(subs[i], path + "/substates/" + std::to_string(i)));
    auto it = j.find("transitions");
    if (it != j.end()) {
      if (!it->is_array())
        schema_error(path + "/transitions", "expected an array");
      for (std::size_t i = 0; i < it->size(); ++i)
        o.transitions.push_back(transition_of(
            (*it)[i], path + "/transitions/" + std::to_string(i)));
    }
    return o;
  }
  if (kind == "and") {
    AndState a;
    a.name = name;
    a.optional = optional;
    const Json& regs = field(j, "regions", path);
    if (!regs.is_array()) schema_error(path + "/regions", "expected an array");
    for (std::size_t i = 0; i < regs.size(); ++i)
      a.regions.push_back(
          state_of(regs[i], path + "/regions/" + std::to_string(i)));
    return a;
  }
  schema_error(path + "/kind", "unknown state kind '" + kind + "'");
}

// Turns dotted state paths into plain names and checks that every
// reference names an existing element.
class Resolver {
 public:
  explicit Resolver(const Statechart& sc) : idx_(sc) {}

  std::string state(const std::string& ref, const std::string& context) const {
    if (ref.find('.') == std::string::npos) {
      if (!idx_.has_state(ref)) unknown(ref, context);
      return ref;
    }
    std::vector<std::string> parts;
    std::stringstream ss(ref);
    for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!idx_.has_state(parts[i])) unknown(ref, context);
      if (i > 0 && idx_.parent(parts[i]) != parts[i - 1]) unknown(ref, context);
    }
    return parts.back();
  }

  std::string element(const std::string& ref,
                      const std::string& context) const {
    if (ref.find('.') == std::string::npos && idx_.has_transition(ref))
      return ref;
    return state(ref, context);
  }

 private:
  [[noreturn]] static void unknown(const std::string& ref,
                                   const std::string& context) {
    throw Error(ErrorCode::kUnknownReference,
                context + " refers to unknown element '" + ref + "'");
  }

  StateIndex idx_;
};

void check_unique_names(const Statechart& sc) {
  NameSet states, transitions;
  for_each_state(sc.root, [&](const State& s) {
    if (!states.insert(s.name()).second)
      throw Error(ErrorCode::kDuplicateName,
                  "state '" + s.name() + "' is declared twice");
  });
  for_each_transition(sc, [&](const Transition& t, const OrState&) {
    if (!transitions.insert(t.name).second)
      throw Error(ErrorCode::kDuplicateName,
                  "transition '" + t.name + "' is declared twice");
  });
}

void resolve_references(Statechart& sc) {
  check_unique_names(sc);
  const Resolver resolve(sc);
  for_each_state_mut(sc.root, [&](State& s) {
    OrState* o = s.as_or();
    if (o == nullptr) return;
    o->initial = resolve.state(o->initial, "initial of '" + o->name + "'");
    for (Transition& t : o->transitions) {
      const std::string ctx = "transition '" + t.name + "'";
      t.source = resolve.state(t.source, ctx);
      t.target = resolve.state(t.target, ctx);
      for (Atom& a : t.condition.atoms)
        if (InState* in = std::get_if<InState>(&a))
          in->state = resolve.state(in->state, ctx);
    }
  });
}

Statechart statechart_of(const Json& j, const std::string& path) {
  Statechart sc{state_of(j, path)};
  resolve_references(sc);
  return sc;
}

std::vector<FeatureGroup> groups_of(const Json& fm, const char* key,
                                    const std::string& path) {
  std::vector<FeatureGroup> out;
  auto it = fm.find(key);
  if (it == fm.end()) return out;
  std::string p = path + "/" + key;
  if (!it->is_array()) schema_error(p, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const Json& g = (*it)[i];
    std::string gp = p + "/" + std::to_string(i);
    FeatureGroup fg;
    fg.parent = string_of(field(g, "parent", gp), gp + "/parent");
    for (std::string& c :
         strings_of(field(g, "children", gp), gp + "/children"))
      fg.children.insert(std::move(c));
    out.push_back(std::move(fg));
  }
  return out;
}

FeatureModel feature_model_of(const Json& j, const std::string& path) {
  FeatureModel fm;
  for (std::string& f : strings_of(field(j, "funcs", path), path + "/funcs"))
    fm.funcs.insert(std::move(f));
  fm.root = string_of(field(j, "root", path), path + "/root");
  fm.mand = groups_of(j, "mand", path);
  fm.opt = groups_of(j, "opt", path);
  fm.alt = groups_of(j, "alt", path);
  fm.or_rel = groups_of(j, "or", path);
  return fm;
}

ImpMapping imp_of(const Json& j, const Statechart& sc,
                  const std::string& path) {
  ImpMapping imp;
  if (!j.is_object()) schema_error(path, "expected an object");
  const Resolver resolve(sc);
  for (const auto& [feature, entry] : j.items()) {
    std::string p = path + "/" + feature;
    ImpEntry e;
    for (const std::string& x :
         strings_of(field(entry, "elements", p), p + "/elements"))
      e.elements.insert(resolve.element(x, "imp entry '" + feature + "'"));
    for (std::string& inc : strings_or_empty(entry, "includes", p))
      e.includes.insert(std::move(inc));
    imp.entries.emplace(feature, std::move(e));
  }
  return imp;
}

// ---------------------------------------------------------------------------
// Writing

Json names_json(const auto& names) {
  Json out = Json::array();
  for (const std::string& n : names) out.push_back(n);
  return out;
}

Json transition_json(const Transition& t) {
  Json j;
  j["name"] = t.name;
  j["source"] = t.source;
  j["target"] = t.target;
  j["trigger"] = names_json(t.trigger);
  Json cond = Json::array();
  for (const Atom& a : t.condition.atoms) {
    if (const Guard* g = std::get_if<Guard>(&a))
      cond.push_back({{"guard", g->text}});
    else
      cond.push_back({{"in", std::get<InState>(a).state}});
  }
  j["condition"] = std::move(cond);
  j["actions"] = names_json(t.actions);
  j["history"] = std::string(history_name(t.history));
  j["optional"] = t.optional;
  if (!t.via.empty()) j["via"] = names_json(t.via);
  return j;
}

Json state_json(const State& s) {
  Json j;
  if (const OrState* o = s.as_or()) {
    j["kind"] = "or";
    j["name"] = o->name;
    j["optional"] = o->optional;
    j["initial"] = o->initial;
    Json subs = Json::array();
    for (const State& c : o->substates) subs.push_back(state_json(c));
    j["substates"] = std::move(subs);
    Json ts = Json::array();
    for (const Transition& t : o->transitions) ts.push_back(transition_json(t));
    j["transitions"] = std::move(ts);
  } else if (const AndState* a = s.as_and()) {
    j["kind"] = "and";
    j["name"] = a->name;
    j["optional"] = a->optional;
    Json regs = Json::array();
    for (const State& c : a->regions) regs.push_back(state_json(c));
    j["regions"] = std::move(regs);
  } else {
    j["kind"] = "simple";
    j["name"] = s.name();
    j["optional"] = s.optional();
  }
  return j;
}

Json groups_json(const auto& groups) {
  Json out = Json::array();
  for (const FeatureGroup& g : groups)
    out.push_back({{"parent", g.parent}, {"children", names_json(g.children)}});
  return out;
}

}  // namespace

Json to_json(const Statechart& sc) { return state_json(sc.root); }

Json to_json(const FeatureModel& fm) {
  Json j;
  j["funcs"] = names_json(fm.funcs);
  j["root"] = fm.root;
  j["mand"] = groups_json(fm.mand);
  j["opt"] = groups_json(fm.opt);
  j["alt"] = groups_json(fm.alt);
  j["or"] = groups_json(fm.or_rel);
  return j;
}

Json to_json(const Configuration& conf) {
  Json j;
  j["selected"] = names_json(conf.selected);
  j["edges"] = groups_json(conf.edges);
  return j;
}

Json to_json(const ImpMapping& imp) {
  Json j = Json::object();
  for (const auto& [feature, e] : imp.entries) {
    Json entry;
    entry["elements"] = names_json(e.elements);
    if (!e.includes.empty()) entry["includes"] = names_json(e.includes);
    j[feature] = std::move(entry);
  }
  return j;
}

Json to_json(const RewriteTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& s : trace.steps) {
    Json j;
    j["rule"] = s.rule;
    j["subject"] = s.subject;
    j["added"] = names_json(s.added);
    j["removed"] = names_json(s.removed);
    j["modified"] = names_json(s.modified);
    steps.push_back(std::move(j));
  }
  return {{"steps", std::move(steps)}};
}

Json to_json(const Violations& violations) {
  Json out = Json::array();
  for (const Violation& v : violations)
    out.push_back(
        {{"code", v.code}, {"element", v.element}, {"message", v.message}});
  return out;
}

bool is_product_line_document(std::string_view text) {
  Json j = parse_json(text);
  return j.is_object() && j.contains("feature_model");
}

ProductLine parse_product_line(std::string_view text) {
  Json j = parse_json(text);
  ProductLine pl;
  pl.fm = feature_model_of(field(j, "feature_model", ""), "/feature_model");
  pl.sc = statechart_of(field(j, "statechart", ""), "/statechart");
  auto it = j.find("imp");
  if (it != j.end()) pl.imp = imp_of(*it, pl.sc, "/imp");
  return pl;
}

std::string serialize_product_line(const ProductLine& pl) {
  Json j;
  j["feature_model"] = to_json(pl.fm);
  j["statechart"] = to_json(pl.sc);
  j["imp"] = to_json(pl.imp);
  return j.dump(2) + "\n";
}

Configuration parse_configuration(std::string_view text) {
  Json j = parse_json(text);
  Configuration conf;
  for (std::string& f : strings_of(field(j, "selected", ""), "/selected"))
    conf.selected.insert(std::move(f));
  for (FeatureGroup& g : groups_of(j, "edges", ""))
    conf.edges.insert(std::move(g));
  return conf;
}

std::string serialize_configuration(const Configuration& conf) {
  return to_json(conf).dump(2) + "\n";
}

Statechart parse_statechart(std::string_view text) {
  Json j = parse_json(text);
  return statechart_of(field(j, "statechart", ""), "/statechart");
}

std::string serialize_statechart(const Statechart& sc) {
  Json j;
  j["statechart"] = to_json(sc);
  return j.dump(2) + "\n";
}

std::string serialize_trace(const RewriteTrace& trace) {
  return to_json(trace).dump(2) + "\n";
}

std::string canonical_text(const Statechart& sc) {
  return to_json(canonicalize(sc)).dump();
}

// ---------------------------------------------------------------------------
// Graphviz

std::string transition_label(const Transition& t) {
  auto join = [](const std::vector<std::string>& v, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += sep;
      out += v[i];
    }
    return out;
  };
  std::string label = join(t.trigger, "::");
  if (!t.condition.is_true()) {
    std::vector<std::string> atoms;
    for (const Atom& a : t.condition.atoms) {
      if (const Guard* g = std::get_if<Guard>(&a))
        atoms.push_back(g->text);
      else
        atoms.push_back("in " + std::get<InState>(a).state);
    }
    label += ", [" + join(atoms, " && ") + "]";
  }
  if (!t.actions.empty()) label += " / " + join(t.actions, "::");
  return label;
}

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class DotWriter {
 public:
  explicit DotWriter(std::ostringstream& out) : out_(out) {}

  void state(const State& s, bool initial, int depth) {
    const std::string pad(2 * depth, ' ');
    std::string style = s.optional() ? "rounded,dashed" : "rounded";
    if (s.kind() == StateKind::kSimple) {
      out_ << pad << quote(s.name()) << " [label=" << quote(s.name())
           << ", style=" << quote(style);
      if (initial) out_ << ", penwidth=2";
      out_ << "];\n";
      return;
    }
    out_ << pad << "subgraph " << quote("cluster_" + s.name()) << " {\n";
    out_ << pad << "  label=" << quote(s.name()) << ";\n";
    out_ << pad << "  style=" << quote(style) << ";\n";
    if (initial) out_ << pad << "  penwidth=2;\n";
    out_ << pad << "  " << quote(s.name())
         << " [shape=point, width=0.05, label=\"\"];\n";
    children(s, depth + 1);
    out_ << pad << "}\n";
  }

  void children(const State& s, int depth) {
    std::vector<const State*> kids;
    for (const State& c : s.children()) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(), [](const State* a, const State* b) {
      return a->name() < b->name();
    });
    const OrState* o = s.as_or();
    for (const State* c : kids)
      state(*c, o != nullptr && o->initial == c->name(), depth);
  }

 private:
  std::ostringstream& out_;
};

}  // namespace

std::string export_dot(const Statechart& sc) {
  std::ostringstream out;
  out << "digraph " << quote(sc.root.name()) << " {\n";
  out << "  label=" << quote(sc.root.name()) << ";\n";
  out << "  compound=true;\n";
  out << "  node [shape=box];\n";
  DotWriter writer(out);
  writer.children(sc.root, 1);

  std::vector<const Transition*> edges;
  for_each_transition(sc, [&](const Transition& t, const OrState&) {
    edges.push_back(&t);
  });
  std::sort(edges.begin(), edges.end(),
            [](const Transition* a, const Transition* b) {
              return a->name < b->name;
            });
  for (const Transition* t : edges) {
    out << "  " << quote(t->source) << " -> " << quote(t->target)
        << " [label=" << quote(t->name + ": " + transition_label(*t))
        << ", style=" << (t->optional ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scstar
