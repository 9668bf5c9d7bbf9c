// Copyright 2026 The callmatch Authors
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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "check_harness.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace callmatch;

  CLI::App app{"callmatch: double-sided call auction matching"};
  app.require_subcommand(1);

  // --- match ---------------------------------------------------------------
  std::string algo_name = "mm";
  std::string input_path;
  std::string output_path;
  std::string format_name = "csv";
  bool no_sort_check = false;

  CLI::App* match = app.add_subcommand(
      "match", "Run one matching algorithm over an order file");
  match->add_option("--algo", algo_name, "mm|fair-mm|um|fairize|ir-middle")
      ->default_val("mm");
  match->add_option("--input", input_path, "order CSV (side,id,price)")
      ->required();
  match->add_option("--output", output_path,
                    "fills file; stdout when omitted");
  match->add_option("--format", format_name, "csv|json")->default_val("csv");
  match->add_flag("--no-sort-check", no_sort_check,
                  "skip the defensive sortedness scan");

  // --- check ---------------------------------------------------------------
  cli::CheckConfig check_config;
  std::string mutate_name;

  CLI::App* check = app.add_subcommand(
      "check", "Fuzz the mechanisms against their invariants and oracles");
  check->add_option("--seeds", check_config.seeds, "number of instances")
      ->default_val(1000);
  check->add_option("--seed-base", check_config.seed_base, "first seed")
      ->default_val(1);
  check->add_option("--max-orders", check_config.max_orders_per_side,
                    "max orders per side")
      ->default_val(10);
  check->add_option("--max-price", check_config.max_price, "max limit price")
      ->default_val(30);
  check->add_flag("--ties", check_config.allow_price_ties,
                  "allow repeated prices");
  check->add_option("--mutate", mutate_name,
                    "self-test with a seeded fault: mm-strict|um-skip|um-reuse");

  // --- verify --------------------------------------------------------------
  std::string verify_orders;
  std::string verify_fills;

  CLI::App* verify = app.add_subcommand(
      "verify", "Re-validate an emitted fills file against its orders");
  verify->add_option("--orders", verify_orders, "order CSV")->required();
  verify->add_option("--fills", verify_fills, "fills file (csv or json)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's fine-grained codes onto the documented contract:
    // 0 for --help/--version, 1 for any usage error.
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  if (match->parsed()) {
    cli::RunConfig config;
    const auto algo = cli::parse_algorithm(algo_name);
    if (!algo.has_value()) {
      std::cerr << "match: unknown algorithm '" << algo_name << "'\n";
      return cli::kExitUsage;
    }
    config.algorithm = *algo;
    config.input = input_path;
    if (!output_path.empty()) config.output = output_path;
    if (format_name == "csv") {
      config.format = cli::Format::csv;
    } else if (format_name == "json") {
      config.format = cli::Format::json;
    } else {
      std::cerr << "match: unknown format '" << format_name << "'\n";
      return cli::kExitUsage;
    }
    config.strict_sort_check = !no_sort_check;
    return cli::run_match(config, std::cout, std::cerr);
  }

  if (check->parsed()) {
    if (!mutate_name.empty()) {
      const auto mutation = cli::parse_mutation(mutate_name);
      if (!mutation.has_value()) {
        std::cerr << "check: unknown mutation '" << mutate_name << "'\n";
        return cli::kExitUsage;
      }
      check_config.mutation = *mutation;
    }
    try {
      return cli::run_check_command(check_config, std::cout);
    } catch (const std::exception& e) {
      std::cerr << "check: " << e.what() << '\n';
      return cli::kExitValidation;
    }
  }

  return cli::run_verify(verify_orders, verify_fills, std::cout, std::cerr);
}
