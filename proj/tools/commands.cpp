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

#include "commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "callmatch/core.hpp"
#include "callmatch/errors.hpp"
#include "callmatch/mechanisms.hpp"
#include "callmatch/oracle.hpp"
#include "callmatch/predicates.hpp"

namespace callmatch::cli {

namespace {

// The oracle is quadratic-ish; beyond this side size the summary prints '-'
// instead of the maximum verdict.
constexpr Count kMaximumFlagSideLimit = 200;

}  // namespace

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "mm") return Algorithm::mm;
  if (name == "fair-mm") return Algorithm::fair_mm;
  if (name == "um") return Algorithm::um;
  if (name == "fairize") return Algorithm::fairize;
  if (name == "ir-middle") return Algorithm::ir_middle;
  return std::nullopt;
}

Matching run_algorithm(const RunConfig& config, const Instance& instance) {
  const bool check = config.strict_sort_check;
  const auto bids_desc = sort_bids_desc(instance.bids);
  switch (config.algorithm) {
    case Algorithm::mm:
      return produce_mm(bids_desc, sort_asks_desc(instance.asks), check);
    case Algorithm::fair_mm:
      return ir_middle(fair_mm(instance.bids, instance.asks));
    case Algorithm::um:
      return produce_um(bids_desc, sort_asks_asc(instance.asks), check);
    case Algorithm::fairize:
      return fairize(
          produce_mm(bids_desc, sort_asks_desc(instance.asks), check),
          instance.bids, instance.asks);
    case Algorithm::ir_middle:
      return ir_middle(
          produce_mm(bids_desc, sort_asks_desc(instance.asks), check));
  }
  return {};
}

std::string summary_line(const Matching& m, const Instance& instance) {
  std::ostringstream os;
  os << "matched=" << m.size();
  if (!m.empty() && is_uniform(m)) {
    os << " uniform_price=" << m.front().trade_price;
  } else {
    os << " uniform_price=-";
  }
  os << " ir=" << (is_ir(m) ? "true" : "false");
  os << " fair="
     << (is_fair(m, instance.bids, instance.asks) ? "true" : "false");
  if (std::max(instance.bids.size(), instance.asks.size()) <=
      kMaximumFlagSideLimit) {
    os << " maximum="
       << (is_maximum(m, instance.bids, instance.asks) ? "true" : "false");
  } else {
    os << " maximum=-";
  }
  return os.str();
}

int run_match(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Instance instance = ingest_orders(config.input);
    const Matching m = run_algorithm(config, instance);
    if (config.output.has_value()) {
      emit_fills(m, *config.output, config.format);
    } else {
      emit_fills(m, out, config.format);
    }
    out << summary_line(m, instance) << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "match: " << e.what() << '\n';
    return kExitValidation;
  }
}

int run_verify(const std::filesystem::path& orders_path,
               const std::filesystem::path& fills_path, std::ostream& out,
               std::ostream& err) {
  try {
    const Instance instance = ingest_orders(orders_path);
    const Matching m = read_fills(fills_path);
    if (!matching_in(instance.bids, instance.asks, m)) {
      out << "verify: FAILED: fills are not a valid matching of the orders\n";
      return kExitValidation;
    }
    out << "verify: ok fills=" << m.size() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace callmatch::cli
