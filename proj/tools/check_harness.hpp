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

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "callmatch/oracle.hpp"
#include "callmatch/types.hpp"

// Randomized invariant campaign: generate instances from seeds, run every
// mechanism, and assert each documented postcondition against the oracles.
// On the first violation the failing instance is shrunk order-by-order while
// the same invariant keeps failing, and the minimized counterexample is
// reported.
//
// The harness can also run with a deliberately broken mechanism swapped in
// (a mutation), which is how the test suite demonstrates that these checks
// are able to catch real bugs.

namespace callmatch::cli {

enum class Mutation {
  none,
  /// produce_mm pairs only on a strict price cross, dropping ties.
  mm_strict,
  /// pair_uniform skips unaffordable asks and keeps scanning instead of
  /// stopping at the first one.
  um_skip,
  /// pair_uniform never consumes a matched ask, reusing it for later bids.
  um_reuse_ask
};

std::optional<Mutation> parse_mutation(const std::string& name);

/// The mechanism entry points the campaign exercises, injectable so
/// mutations can replace one implementation while everything downstream of
/// it is composed the same way the real pipeline is.
struct MechanismSet {
  // Takes bids sorted non-increasing and asks sorted non-increasing.
  std::function<Matching(std::span<const Bid>, std::span<const Ask>)> mm;
  // Take bids sorted non-increasing and asks sorted non-decreasing.
  std::function<Matching(std::span<const Bid>, std::span<const Ask>)> um_pairs;
  std::function<Matching(std::span<const Bid>, std::span<const Ask>)> um;
  // Takes the books in any order.
  std::function<Matching(std::span<const Bid>, std::span<const Ask>)> fair_mm;
};

MechanismSet real_mechanisms();
MechanismSet mutated_mechanisms(Mutation mutation);

/// Runs every invariant against one instance and returns the names of all
/// that failed (empty means the instance is clean). `trial_seed` feeds the
/// auxiliary random matching used to exercise the rewrite mechanisms.
std::vector<std::string> failed_invariants(const Instance& instance,
                                           const MechanismSet& mechanisms,
                                           std::uint64_t trial_seed);

struct CheckConfig {
  Count seeds = 1000;
  std::uint64_t seed_base = 1;
  Count max_orders_per_side = 10;
  Price max_price = 30;
  bool allow_price_ties = false;
  Mutation mutation = Mutation::none;
};

struct CheckReport {
  bool ok = true;
  Count seeds_run = 0;
  std::uint64_t failing_seed = 0;
  std::string invariant;
  Instance counterexample;  // minimized
};

CheckReport run_check(const CheckConfig& config);

/// run_check plus reporting; returns the process exit code.
int run_check_command(const CheckConfig& config, std::ostream& out);

}  // namespace callmatch::cli
