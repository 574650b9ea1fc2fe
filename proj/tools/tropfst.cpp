// Copyright 2026 The tropfst Authors.
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
//
// tropfst: command-line front end.
//
//   tropfst push IN OUT
//   tropfst rmepsilon IN OUT [--trim]
//   tropfst decode IN --obs FILE --seq FILE [--theta T] [--metrics CSV]
//   tropfst metrics IN --obs FILE --seq FILE --theta T [--metrics CSV]
//   tropfst info IN [--matrix]
//   tropfst validate IN

#include <iostream>

#include "CLI11.hpp"
#include "tropfst/cli.hpp"

int main(int argc, char **argv) {
  using tropfst::cli::Command;
  using tropfst::cli::CommandConfig;

  CLI::App app{"Weighted finite-state transducer tools over the min-plus "
               "algebra"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto *push = app.add_subcommand("push", "Push weights towards the initial states");
  push->add_option("IN", cfg.input, "Input machine")->required();
  push->add_option("OUT", cfg.output, "Output machine ('-' for stdout)")->required();

  auto *rmeps = app.add_subcommand("rmepsilon", "Remove <eps>:<eps> arcs");
  rmeps->add_option("IN", cfg.input, "Input machine")->required();
  rmeps->add_option("OUT", cfg.output, "Output machine ('-' for stdout)")->required();
  rmeps->add_flag("--trim", cfg.trim,
                  "Drop states not on a path from an initial to a final state");

  auto add_decode_options = [&cfg](CLI::App *sub, bool theta_required) {
    sub->add_option("IN", cfg.input, "Input machine")->required();
    sub->add_option("--obs", cfg.obs_path, "Observation model")->required();
    sub->add_option("--seq", cfg.seq_path, "Symbol sequence")->required();
    auto *theta = sub->add_option("--theta", cfg.theta, "Pruning leniency (>= 0)")
                      ->check(CLI::NonNegativeNumber);
    if (theta_required) theta->required();
    sub->add_option("--metrics", cfg.metrics_path, "Per-step metrics CSV");
  };
  auto *decode = app.add_subcommand("decode", "Viterbi-decode a symbol sequence");
  add_decode_options(decode, false);
  auto *metrics = app.add_subcommand(
      "metrics", "Emit the per-step pruning metrics trace (stdout by default)");
  add_decode_options(metrics, true);

  auto *info = app.add_subcommand("info", "Print machine statistics");
  info->add_option("IN", cfg.input, "Input machine")->required();
  info->add_flag("--matrix", cfg.dump_matrix, "Also print the transition matrix");

  auto *validate = app.add_subcommand("validate", "Check structural constraints");
  validate->add_option("IN", cfg.input, "Input machine")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return tropfst::cli::kExitUsage;
  }

  if (push->parsed()) cfg.command = Command::kPush;
  else if (rmeps->parsed()) cfg.command = Command::kRmEpsilon;
  else if (decode->parsed()) cfg.command = Command::kDecode;
  else if (metrics->parsed()) cfg.command = Command::kMetrics;
  else if (info->parsed()) cfg.command = Command::kInfo;
  else cfg.command = Command::kValidate;

  return tropfst::cli::Run(cfg, std::cout, std::cerr);
}
