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

// scstar: validate product lines and instantiate concrete statecharts.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "scstar/binding.h"
#include "scstar/feature_model.h"
#include "scstar/generator.h"
#include "scstar/io.h"
#include "scstar/properties.h"
#include "scstar/strategy.h"

namespace {

using Json = nlohmann::ordered_json;
using scstar::ErrorCode;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kSyntax = 2;
constexpr int kRewrite = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

Json names(const scstar::NameSet& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

void print_lines(const scstar::NameSet& s) {
  for (const std::string& x : s) std::cout << x << "\n";
}

int report_violations(const scstar::Violations& vs, bool json) {
  if (json) {
    std::cout << Json{{"valid", vs.empty()}, {"violations", scstar::to_json(vs)}}.dump()
              << "\n";
  } else if (vs.empty()) {
    std::cout << "ok\n";
  } else {
    for (const scstar::Violation& v : vs) std::cout << scstar::to_string(v) << "\n";
  }
  return vs.empty() ? kOk : kInvalid;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
    case ErrorCode::kDuplicateName:
    case ErrorCode::kUnknownReference:
      return kSyntax;
    case ErrorCode::kInvalidInput:
    case ErrorCode::kUnknownFeature:
      return kInvalid;
    default:
      return kRewrite;
  }
}

int fail(const std::string& code, const std::string& message, int exit_code,
         bool json) {
  if (json)
    std::cout << Json{{"error", code}, {"message", message}}.dump() << "\n";
  else
    std::cerr << "scstar: " << message << "\n";
  return exit_code;
}

struct Args {
  std::string pl;
  std::string conf;
  std::string out;
  std::string dot;
  std::string trace;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool literal_reading = false;
  bool json = false;
};

int cmd_validate(const Args& a) {
  const std::string text = read_file(a.pl);
  if (!scstar::is_product_line_document(text))
    return report_violations(
        scstar::check_well_formed(scstar::parse_statechart(text)), a.json);
  const scstar::ProductLine pl = scstar::parse_product_line(text);
  scstar::Violations all = scstar::validate_feature_model(pl.fm);
  for (scstar::Violations more :
       {scstar::check_well_formed(pl.sc), scstar::validate_imp(pl.fm, pl.sc, pl.imp)})
    all.insert(all.end(), more.begin(), more.end());
  return report_violations(all, a.json);
}

int cmd_kernel(const Args& a) {
  const scstar::ProductLine pl = scstar::parse_product_line(read_file(a.pl));
  const scstar::NameSet k = scstar::kernel(pl.fm);
  if (a.json)
    std::cout << Json{{"kernel", names(k)}}.dump() << "\n";
  else
    print_lines(k);
  return kOk;
}

int cmd_config_check(const Args& a) {
  const scstar::ProductLine pl = scstar::parse_product_line(read_file(a.pl));
  const scstar::Configuration conf =
      scstar::parse_configuration(read_file(a.conf));
  return report_violations(scstar::validate_configuration(pl.fm, conf), a.json);
}

int cmd_nsc(const Args& a) {
  const scstar::ProductLine pl = scstar::parse_product_line(read_file(a.pl));
  const scstar::Configuration conf =
      scstar::parse_configuration(read_file(a.conf));
  const scstar::Violations vs = scstar::validate_configuration(pl.fm, conf);
  if (!vs.empty()) return report_violations(vs, a.json);
  const scstar::NameSet f = scstar::nsf(pl.fm, conf);
  const scstar::NameSet c = scstar::nsc(pl.fm, conf, pl.sc, pl.imp);
  if (a.json) {
    std::cout << Json{{"nsf", names(f)}, {"nsc", names(c)}}.dump() << "\n";
  } else {
    std::cout << "NSF:\n";
    print_lines(f);
    std::cout << "NSC:\n";
    print_lines(c);
  }
  return kOk;
}

int cmd_instantiate(const Args& a) {
  const scstar::ProductLine pl = scstar::parse_product_line(read_file(a.pl));
  const scstar::Configuration conf =
      scstar::parse_configuration(read_file(a.conf));
  const scstar::Instantiation inst = scstar::instantiate(pl, conf);
  write_file(a.out, scstar::serialize_statechart(inst.machine));
  if (!a.dot.empty()) write_file(a.dot, scstar::export_dot(inst.machine));
  if (!a.trace.empty()) write_file(a.trace, scstar::serialize_trace(inst.trace));
  if (a.json) {
    std::cout << Json{{"output", a.out},
                      {"nsc", names(inst.nsc)},
                      {"trace", scstar::to_json(inst.trace)}}
                     .dump()
              << "\n";
  } else {
    for (const scstar::TraceStep& s : inst.trace.steps)
      std::cout << s.rule << (s.subject.empty() ? "" : "(" + s.subject + ")")
                << "\n";
  }
  return kOk;
}

int cmd_confluence(const Args& a) {
  const scstar::ProductLine pl = scstar::parse_product_line(read_file(a.pl));
  const scstar::Configuration conf =
      scstar::parse_configuration(read_file(a.conf));
  scstar::RewriteOptions options;
  options.pending_grants_reachability = a.literal_reading;
  const scstar::ConfluenceReport r =
      scstar::check_confluence(pl, conf, a.trials, a.seed, options);
  if (a.json) {
    Json j{{"confluent", r.confluent},
           {"trials", r.trials},
           {"distinct_outcomes", r.distinct_outcomes},
           {"longest_trace", r.longest_trace},
           {"bounded", r.bounded},
           {"divergence", nullptr}};
    if (r.divergence)
      j["divergence"] = {{"first_order", r.divergence->first_order},
                         {"second_order", r.divergence->second_order},
                         {"first_outcome", r.divergence->first_outcome},
                         {"second_outcome", r.divergence->second_outcome}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (r.confluent ? "confluent" : "NOT confluent") << ": "
              << r.trials << " trials, " << r.distinct_outcomes
              << " distinct outcome(s), longest trace " << r.longest_trace
              << "\n";
    if (r.divergence) {
      std::cout << "first outcome:  " << r.divergence->first_outcome << "\n"
                << "second outcome: " << r.divergence->second_outcome << "\n";
    }
  }
  return r.confluent ? kOk : kInvalid;
}

int cmd_fuzz(const Args& a) {
  Json failures = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed + i;
    const scstar::GeneratedProductLine g =
        scstar::generate_random_product_line(seed);
    const scstar::PropertyReport r =
        scstar::check_properties(g.pl, g.conf, 20, seed);
    if (r.ok()) {
      ++passed;
      continue;
    }
    failures.push_back({{"seed", seed}, {"problems", r.failures}});
    if (!a.json)
      for (const std::string& f : r.failures)
        std::cout << "seed " << seed << ": " << f << "\n";
  }
  if (a.json)
    std::cout << Json{{"count", a.count}, {"passed", passed}, {"failures", failures}}
                     .dump()
              << "\n";
  else
    std::cout << passed << "/" << a.count << " generated product lines passed\n";
  return passed == a.count ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instantiate concrete statecharts from a statechart product line"};
  app.require_subcommand(1);
  Args a;

  auto with_json = [&](CLI::App* sub) {
    sub->add_flag("--json", a.json, "Emit one JSON object on stdout");
    return sub;
  };

  auto* validate = with_json(app.add_subcommand(
      "validate", "Check a product line or statechart file"));
  validate->add_option("pl-file", a.pl)->required();

  auto* kernel_cmd = with_json(
      app.add_subcommand("kernel", "Print the kernel features"));
  kernel_cmd->add_option("pl-file", a.pl)->required();

  auto* config_check = with_json(app.add_subcommand(
      "config-check", "Check a configuration against the feature model"));
  config_check->add_option("pl-file", a.pl)->required();
  config_check->add_option("conf-file", a.conf)->required();

  auto* nsc_cmd = with_json(app.add_subcommand(
      "nsc", "Print non-selected features and components"));
  nsc_cmd->add_option("pl-file", a.pl)->required();
  nsc_cmd->add_option("conf-file", a.conf)->required();

  auto* inst = with_json(app.add_subcommand(
      "instantiate", "Derive the concrete statechart of a configuration"));
  inst->add_option("pl-file", a.pl)->required();
  inst->add_option("conf-file", a.conf)->required();
  inst->add_option("-o,--output", a.out, "Concrete statechart output")
      ->required();
  inst->add_option("--dot", a.dot, "Also write Graphviz DOT");
  inst->add_option("--trace", a.trace, "Also write the rewrite trace");

  auto* conf_cmd = with_json(app.add_subcommand(
      "confluence", "Instantiate under shuffled rule orders and compare"));
  conf_cmd->add_option("pl-file", a.pl)->required();
  conf_cmd->add_option("conf-file", a.conf)->required();
  conf_cmd->add_option("--trials", a.trials, "Number of shuffled orders");
  conf_cmd->add_option("--seed", a.seed, "Shuffle seed");
  conf_cmd->add_flag("--paper-literal", a.literal_reading,
                     "Let pending transitions count for reachability");

  auto* fuzz = with_json(app.add_subcommand(
      "fuzz", "Run the property pipeline on generated product lines"));
  fuzz->add_option("--seed", a.seed, "First generator seed");
  fuzz->add_option("--count", a.count, "Number of product lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kSyntax;
  }

  try {
    if (*validate) return cmd_validate(a);
    if (*kernel_cmd) return cmd_kernel(a);
    if (*config_check) return cmd_config_check(a);
    if (*nsc_cmd) return cmd_nsc(a);
    if (*inst) return cmd_instantiate(a);
    if (*conf_cmd) return cmd_confluence(a);
    if (*fuzz) return cmd_fuzz(a);
  } catch (const scstar::Error& e) {
    return fail(std::string(scstar::error_code_name(e.code())), e.what(),
                exit_code_for(e.code()), a.json);
  } catch (const IoError& e) {
    return fail("E_IO", e.what(), kSyntax, a.json);
  }
  return kSyntax;
}
