// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polycone/cli.hpp"

namespace {

using namespace polycone;

struct CommonArgs {
  int cyclic_n = 0;
  std::string presentation;
  long degree_cap = -1;
  bool json = false;
  bool text = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool takes_presentation) {
  cmd->add_option("--cyclic", args.cyclic_n, "use the cyclic presentation");
  if (takes_presentation)
    cmd->add_option("presentation", args.presentation,
                    "presentation, e.g. \"n=4; {1,2},{2,3},{3,4},{4,1}\"");
  cmd->add_option("--degree-cap", args.degree_cap,
                  "highest degree counted (default: dim + 6)");
  cmd->add_flag("--json", args.json, "structured output");
  cmd->add_flag("--text", args.text, "plain text output (default)");
}

Presentation resolve(const CommonArgs& args) {
  if (args.cyclic_n > 0 && !args.presentation.empty())
    throw std::invalid_argument("give either --cyclic N or a presentation");
  if (args.cyclic_n > 0) return cyclic_presentation(args.cyclic_n);
  if (!args.presentation.empty()) return parse_presentation(args.presentation);
  throw std::invalid_argument("missing input: --cyclic N or a presentation");
}

int resolve_n(const CommonArgs& args) {
  if (args.cyclic_n > 0) return args.cyclic_n;
  if (!args.presentation.empty())
    return parse_presentation(args.presentation).n;
  throw std::invalid_argument("missing input: --cyclic N or a presentation");
}

void render(const cli::RunReport& rep, const CommonArgs& args) {
  if (args.json)
    std::cout << rep.document.dump(2) << "\n";
  else
    std::cout << rep.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cones of transversal polymatroids"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  CommonArgs args;
  int m_min = 1, m_max = 0;

  CLI::App* bases = app.add_subcommand("bases", "enumerate base points");
  add_common(bases, args, true);
  CLI::App* facets = app.add_subcommand("facets", "facets of the base cone");
  add_common(facets, args, true);
  CLI::App* predict =
      app.add_subcommand("predict", "closed-form cyclic facet normals");
  add_common(predict, args, true);
  CLI::App* verify =
      app.add_subcommand("verify", "check the cyclic facet description");
  add_common(verify, args, true);
  CLI::App* gorenstein =
      app.add_subcommand("gorenstein", "Gorenstein test via h-vector");
  add_common(gorenstein, args, true);
  CLI::App* hilbert =
      app.add_subcommand("hilbert", "h-vector of the base ring");
  add_common(hilbert, args, true);
  CLI::App* probe =
      app.add_subcommand("probe", "facet-subset and Gorenstein probe");
  add_common(probe, args, true);
  CLI::App* classify =
      app.add_subcommand("classify", "Gorenstein classes over [n]");
  add_common(classify, args, true);
  classify->add_option("--m-min", m_min, "smallest set count");
  classify->add_option("--m-max", m_max, "largest set count (default n)");
  CLI::App* emit =
      app.add_subcommand("emit-normaliz", "matrix input for the base cone");
  add_common(emit, args, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return polycone::cli::kUsageError;
  }

  cli::Budget budget = cli::Budget::from_environment();
  budget.degree_cap = args.degree_cap;

  try {
    cli::RunReport rep;
    if (bases->parsed())
      rep = cli::cmd_bases(resolve(args), budget);
    else if (facets->parsed())
      rep = cli::cmd_facets(resolve(args), budget);
    else if (predict->parsed())
      rep = cli::cmd_predict(resolve_n(args), budget);
    else if (verify->parsed())
      rep = cli::cmd_verify(resolve_n(args), budget);
    else if (gorenstein->parsed())
      rep = cli::cmd_gorenstein(resolve(args), budget);
    else if (hilbert->parsed())
      rep = cli::cmd_hilbert(resolve(args), budget);
    else if (probe->parsed())
      rep = cli::cmd_probe(resolve(args), budget);
    else if (classify->parsed()) {
      int n = resolve_n(args);
      rep = cli::cmd_classify(n, m_min, m_max > 0 ? m_max : n, budget);
    } else if (emit->parsed()) {
      rep = cli::cmd_emit_normaliz(resolve(args), budget);
    }
    render(rep, args);
    return rep.exit_code;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kBudgetExceeded;
  } catch (const inconsistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
}
