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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "callmatch/types.hpp"
#include "order_io.hpp"

namespace callmatch::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInvariantViolation = 3;

enum class Algorithm {
  mm,        // maximum matching, priced at the bid
  fair_mm,   // fair maximum matching, midpoint-priced
  um,        // uniform-price auction
  fairize,   // fairness rewrite of the maximum matching
  ir_middle  // maximum matching re-priced at pair midpoints
};

std::optional<Algorithm> parse_algorithm(const std::string& name);

struct RunConfig {
  Algorithm algorithm = Algorithm::mm;
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;  // stdout when absent
  Format format = Format::csv;
  bool strict_sort_check = true;
};

/// Executes the selected mechanism on the ingested instance. The transform
/// modes (fairize, ir_middle) apply to the maximum matching as their input;
/// fair_mm finishes with midpoint pricing so emitted trades are always
/// individually rational.
Matching run_algorithm(const RunConfig& config, const Instance& instance);

/// One-line result summary: matched count, the single clearing price when
/// one exists, and the predicate verdicts. The maximum flag consults the
/// matching-size oracle and is suppressed (printed as '-') above side size
/// 200 to keep its cost bounded.
std::string summary_line(const Matching& m, const Instance& instance);

/// ingest -> run -> emit -> summary. Returns a process exit code; failures
/// are reported on `err`.
int run_match(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Re-validates an emitted fills file against its order file.
int run_verify(const std::filesystem::path& orders_path,
               const std::filesystem::path& fills_path, std::ostream& out,
               std::ostream& err);

}  // namespace callmatch::cli
