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

#include "check_harness.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "callmatch/core.hpp"
#include "callmatch/mechanisms.hpp"
#include "callmatch/predicates.hpp"
#include "commands.hpp"
#include "order_io.hpp"

namespace callmatch::cli {

namespace {

using oracle::Lcg64;

// ---------------------------------------------------------------------------
// Mechanism sets and seeded faults.

Matching um_from_pairs(Matching pairs) {
  if (pairs.empty()) return pairs;
  const Price clearing = pairs.back().bid.price;
  for (Fill& f : pairs) f.trade_price = clearing;
  return pairs;
}

Matching mm_strict_compare(std::span<const Bid> bids,
                           std::span<const Ask> asks) {
  Matching out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < bids.size() && j < asks.size()) {
    if (asks[j].price < bids[i].price) {  // fault: ties no longer cross
      out.push_back(Fill{bids[i], asks[j], bids[i].price});
      ++i;
      ++j;
    } else {
      ++j;
    }
  }
  return out;
}

Matching um_skip_pairs(std::span<const Bid> bids, std::span<const Ask> asks) {
  Matching out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < bids.size() && j < asks.size()) {
    if (asks[j].price <= bids[i].price) {
      out.push_back(Fill{bids[i], asks[j], bids[i].price});
      ++i;
      ++j;
    } else {
      ++j;  // fault: scans past the stopping point
    }
  }
  return out;
}

Matching um_reuse_ask_pairs(std::span<const Bid> bids,
                            std::span<const Ask> asks) {
  Matching out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < bids.size() && j < asks.size()) {
    if (asks[j].price <= bids[i].price) {
      out.push_back(Fill{bids[i], asks[j], bids[i].price});
      ++i;  // fault: the matched ask is never consumed
    } else {
      break;
    }
  }
  return out;
}

}  // namespace

std::optional<Mutation> parse_mutation(const std::string& name) {
  if (name == "mm-strict") return Mutation::mm_strict;
  if (name == "um-skip") return Mutation::um_skip;
  if (name == "um-reuse") return Mutation::um_reuse_ask;
  return std::nullopt;
}

MechanismSet real_mechanisms() {
  MechanismSet m;
  m.mm = [](std::span<const Bid> b, std::span<const Ask> a) {
    return produce_mm(b, a);
  };
  m.um_pairs = [](std::span<const Bid> b, std::span<const Ask> a) {
    return pair_uniform(b, a);
  };
  m.um = [](std::span<const Bid> b, std::span<const Ask> a) {
    return produce_um(b, a);
  };
  m.fair_mm = [](std::span<const Bid> b, std::span<const Ask> a) {
    return fair_mm(b, a);
  };
  return m;
}

MechanismSet mutated_mechanisms(Mutation mutation) {
  MechanismSet m = real_mechanisms();
  switch (mutation) {
    case Mutation::none:
      break;
    case Mutation::mm_strict:
      m.mm = mm_strict_compare;
      // fair_mm composed exactly like the real pipeline, on the faulty core.
      m.fair_mm = [](std::span<const Bid> b, std::span<const Ask> a) {
        Matching mm = mm_strict_compare(sort_bids_desc({b.begin(), b.end()}),
                                        sort_asks_desc({a.begin(), a.end()}));
        return make_fair_on_asks(sort_fills_by_ask_asc(std::move(mm)),
                                 sort_asks_asc({a.begin(), a.end()}));
      };
      break;
    case Mutation::um_skip:
      m.um_pairs = um_skip_pairs;
      m.um = [](std::span<const Bid> b, std::span<const Ask> a) {
        return um_from_pairs(um_skip_pairs(b, a));
      };
      break;
    case Mutation::um_reuse_ask:
      m.um_pairs = um_reuse_ask_pairs;
      m.um = [](std::span<const Bid> b, std::span<const Ask> a) {
        return um_from_pairs(um_reuse_ask_pairs(b, a));
      };
      break;
  }
  return m;
}

namespace {

// ---------------------------------------------------------------------------
// Auxiliary material for the per-instance checks.

// Price grid covering every step of demand_at/supply_at: zero, every limit
// price, and one beyond the highest.
std::vector<Price> price_grid(const Instance& inst) {
  std::set<Price> grid;
  grid.insert(0);
  Price top = 0;
  for (const Bid& b : inst.bids) {
    grid.insert(b.price);
    top = std::max(top, b.price);
  }
  for (const Ask& a : inst.asks) {
    grid.insert(a.price);
    top = std::max(top, a.price);
  }
  grid.insert(top + 1);
  return {grid.begin(), grid.end()};
}

// A pseudo-random valid matching with arbitrary trade prices, used to feed
// the rewrite mechanisms something other than their own pipeline outputs.
Matching random_matching(const Instance& inst, std::uint64_t trial_seed) {
  Lcg64 rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);
  Matching m;
  std::vector<char> ask_used(inst.asks.size(), 0);
  Price top = 1;
  for (const Ask& a : inst.asks) top = std::max(top, a.price);
  for (const Bid& b : inst.bids) top = std::max(top, b.price);
  for (const Bid& b : inst.bids) {
    if (rng.next_in(2) == 0) continue;  // leave ~1/3 of bids out
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < inst.asks.size(); ++j) {
      if (!ask_used[j] && inst.asks[j].price <= b.price) free.push_back(j);
    }
    if (free.empty()) continue;
    const std::size_t j = free[rng.next_in(free.size() - 1)];
    ask_used[j] = 1;
    m.push_back(Fill{b, inst.asks[j], rng.next_in(top)});
  }
  return m;
}

std::vector<Price> trade_price_multiset(const Matching& m) {
  std::vector<Price> prices;
  prices.reserve(m.size());
  for (const Fill& f : m) prices.push_back(f.trade_price);
  std::sort(prices.begin(), prices.end());
  return prices;
}

bool bounds_hold_on_grid(const Instance& inst, const Matching& m,
                         const std::vector<Price>& grid) {
  for (Price p : grid) {
    if (!volume_bounds_report(inst.bids, inst.asks, m, p).all_ok()) {
      return false;
    }
  }
  return true;
}

bool bounds_counts_contained(const Instance& inst, const Matching& m,
                             const std::vector<Price>& grid) {
  for (Price p : grid) {
    const auto r = volume_bounds_report(inst.bids, inst.asks, m, p);
    if (r.matched_bids_above > r.demand) return false;
    if (r.matched_asks_below > r.supply) return false;
  }
  return true;
}

struct Verdicts {
  std::vector<std::string> failed;

  void expect(bool ok, const char* invariant) {
    if (!ok) failed.emplace_back(invariant);
  }
};

}  // namespace

std::vector<std::string> failed_invariants(const Instance& inst,
                                           const MechanismSet& mech,
                                           std::uint64_t trial_seed) {
  Verdicts v;

  const auto bids_desc = sort_bids_desc(inst.bids);
  const auto asks_desc = sort_asks_desc(inst.asks);
  const auto asks_asc = sort_asks_asc(inst.asks);
  const auto grid = price_grid(inst);

  const Count oracle_mm = oracle::max_matching_size(inst.bids, inst.asks);
  const Count oracle_um = oracle::max_uniform_size(inst.bids, inst.asks);

  // Maximum matching mechanism.
  const Matching mm = mech.mm(bids_desc, asks_desc);
  v.expect(matching_in(inst.bids, inst.asks, mm), "produce_mm.matching_in");
  v.expect(is_ir(mm), "produce_mm.is_ir");
  v.expect(fair_on_bids(mm, inst.bids), "produce_mm.fair_on_bids");
  v.expect(mm.size() == oracle_mm, "produce_mm.maximum");

  // Scan bound of the library implementation (independent of any mutation).
  MatchStats stats;
  produce_mm(bids_desc, asks_desc, false, &stats);
  v.expect(stats.head_comparisons <= inst.bids.size() + inst.asks.size(),
           "produce_mm.scan_bound");

  // Fair maximum matching.
  const Matching fmm = mech.fair_mm(inst.bids, inst.asks);
  v.expect(matching_in(inst.bids, inst.asks, fmm), "fair_mm.matching_in");
  v.expect(is_fair(fmm, inst.bids, inst.asks), "fair_mm.is_fair");
  v.expect(fmm.size() == oracle_mm, "fair_mm.maximum");
  v.expect(fmm.size() == mm.size(), "fair_mm.preserves_size");

  // Uniform-price mechanism.
  const Matching pairs = mech.um_pairs(bids_desc, asks_asc);
  v.expect(fair_on_bids(pairs, inst.bids), "pair_uniform.fair_on_bids");
  v.expect(fair_on_asks(pairs, inst.asks), "pair_uniform.fair_on_asks");

  const Matching um = mech.um(bids_desc, asks_asc);
  v.expect(matching_in(inst.bids, inst.asks, um), "produce_um.matching_in");
  v.expect(is_uniform(um), "produce_um.is_uniform");
  v.expect(is_ir(um), "produce_um.is_ir");
  v.expect(is_fair(um, inst.bids, inst.asks), "produce_um.is_fair");
  v.expect(um.size() == oracle_um, "produce_um.max_uniform");

  // Rewrite mechanisms, fed a matching that did not come from them.
  const Matching rm = random_matching(inst, trial_seed);

  const Matching repriced = ir_middle(rm);
  v.expect(is_ir(repriced), "ir_middle.is_ir");
  v.expect(bids_of(repriced) == bids_of(rm) && asks_of(repriced) == asks_of(rm),
           "ir_middle.preserves_pairs");
  v.expect(matching_in(inst.bids, inst.asks, repriced),
           "ir_middle.matching_in");

  const Matching fz = fairize(rm, inst.bids, inst.asks);
  v.expect(matching_in(inst.bids, inst.asks, fz), "fairize.matching_in");
  v.expect(is_fair(fz, inst.bids, inst.asks), "fairize.is_fair");
  v.expect(fz.size() == rm.size(), "fairize.preserves_size");
  v.expect(trade_price_multiset(fz) == trade_price_multiset(rm),
           "fairize.preserves_trade_prices");

  // The two fairness passes in isolation, on their sorted preconditions.
  // Each must keep the length, the untouched side, and the trade-price
  // sequence of its input.
  const auto trade_prices = [](const Matching& m) {
    std::vector<Price> out;
    out.reserve(m.size());
    for (const Fill& f : m) out.push_back(f.trade_price);
    return out;
  };

  const Matching rm_by_bid = sort_fills_by_bid_desc(rm);
  const Matching fob = make_fair_on_bids(rm_by_bid, bids_desc);
  v.expect(fob.size() == rm.size() && asks_of(fob) == asks_of(rm_by_bid) &&
               trade_prices(fob) == trade_prices(rm_by_bid),
           "make_fob.preserves");
  v.expect(fair_on_bids(fob, inst.bids), "make_fob.fair_on_bids");

  const Matching rm_by_ask = sort_fills_by_ask_asc(rm);
  const Matching foa = make_fair_on_asks(rm_by_ask, asks_asc);
  v.expect(foa.size() == rm.size() && bids_of(foa) == bids_of(rm_by_ask) &&
               trade_prices(foa) == trade_prices(rm_by_ask),
           "make_foa.preserves");
  v.expect(fair_on_asks(foa, inst.asks), "make_foa.fair_on_asks");

  // Demand/supply bounds across the whole price grid, for every output.
  const Matching* outputs[] = {&mm, &fmm, &um, &pairs, &rm, &repriced, &fz};
  for (const Matching* m : outputs) {
    if (!matching_in(inst.bids, inst.asks, *m)) continue;  // already reported
    if (!bounds_hold_on_grid(inst, *m, grid)) {
      v.failed.emplace_back("volume_bounds.outputs");
      break;
    }
  }
  for (const Matching* m : outputs) {
    if (!bounds_counts_contained(inst, *m, grid)) {
      v.failed.emplace_back("volume_bounds.containment");
      break;
    }
  }

  // Fairness predicate against its threshold-scan form.
  for (const Matching* m : outputs) {
    if (is_fair(*m, inst.bids, inst.asks) !=
        oracle::is_fair_by_threshold(*m, inst.bids, inst.asks)) {
      v.failed.emplace_back("fairness.dual_form");
      break;
    }
  }

  // Oracles are insensitive to book order.
  {
    std::vector<Bid> bids_rev(inst.bids.rbegin(), inst.bids.rend());
    std::vector<Ask> asks_rev(inst.asks.rbegin(), inst.asks.rend());
    v.expect(oracle::max_matching_size(bids_rev, asks_rev) == oracle_mm &&
                 oracle::max_uniform_size(bids_rev, asks_rev) == oracle_um,
             "oracle.order_insensitive");
  }

  // Exhaustive cross-checks on small instances.
  if (std::max(inst.bids.size(), inst.asks.size()) <=
      oracle::kEnumerationSideLimit - 1) {
    Count best_any = 0;
    Count best_uniform_ir = 0;
    bool enum_bounds_ok = true;
    bool enum_dual_ok = true;
    bool um_dominates = true;
    oracle::enumerate_matchings(
        inst.bids, inst.asks, [&](const Matching& cand) {
          best_any = std::max(best_any, cand.size());
          if (oracle::uniform_ir_realizable(cand)) {
            best_uniform_ir = std::max(best_uniform_ir, cand.size());
            if (cand.size() > um.size()) um_dominates = false;
          }
          if (enum_bounds_ok && !bounds_hold_on_grid(inst, cand, grid)) {
            enum_bounds_ok = false;
          }
          if (enum_dual_ok &&
              is_fair(cand, inst.bids, inst.asks) !=
                  oracle::is_fair_by_threshold(cand, inst.bids, inst.asks)) {
            enum_dual_ok = false;
          }
        });
    v.expect(best_any == oracle_mm, "oracle.enumeration_max_agrees");
    v.expect(best_uniform_ir == oracle_um,
             "oracle.enumeration_uniform_agrees");
    v.expect(um_dominates, "produce_um.dominates_uniform_ir");
    v.expect(enum_bounds_ok, "volume_bounds.enumerated");
    v.expect(enum_dual_ok, "fairness.dual_form_enumerated");
  }

  return v.failed;
}

namespace {

bool still_fails(const Instance& inst, const MechanismSet& mech,
                 std::uint64_t trial_seed, const std::string& invariant) {
  const auto failed = failed_invariants(inst, mech, trial_seed);
  return std::find(failed.begin(), failed.end(), invariant) != failed.end();
}

// Greedy order-by-order shrink: keep dropping any single order whose removal
// preserves the failure, until no single removal does.
Instance minimize(Instance inst, const MechanismSet& mech,
                  std::uint64_t trial_seed, const std::string& invariant) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < inst.bids.size(); ++i) {
      Instance candidate = inst;
      candidate.bids.erase(candidate.bids.begin() +
                           static_cast<std::ptrdiff_t>(i));
      if (still_fails(candidate, mech, trial_seed, invariant)) {
        inst = std::move(candidate);
        shrunk = true;
        break;
      }
    }
    if (shrunk) continue;
    for (std::size_t i = 0; i < inst.asks.size(); ++i) {
      Instance candidate = inst;
      candidate.asks.erase(candidate.asks.begin() +
                           static_cast<std::ptrdiff_t>(i));
      if (still_fails(candidate, mech, trial_seed, invariant)) {
        inst = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return inst;
}

}  // namespace

CheckReport run_check(const CheckConfig& config) {
  CheckReport report;
  const MechanismSet mech = mutated_mechanisms(config.mutation);
  for (Count i = 0; i < config.seeds; ++i) {
    const std::uint64_t seed = config.seed_base + i;
    oracle::GenParams params;
    params.seed = seed;
    params.max_orders_per_side = config.max_orders_per_side;
    params.max_price = config.max_price;
    params.allow_price_ties = config.allow_price_ties;
    const Instance inst = oracle::gen_instance(params);

    const auto failed = failed_invariants(inst, mech, seed);
    ++report.seeds_run;
    if (!failed.empty()) {
      report.ok = false;
      report.failing_seed = seed;
      report.invariant = failed.front();
      report.counterexample = minimize(inst, mech, seed, failed.front());
      return report;
    }
  }
  return report;
}

int run_check_command(const CheckConfig& config, std::ostream& out) {
  const CheckReport report = run_check(config);
  if (report.ok) {
    out << "check: " << report.seeds_run
        << " seeds, all invariants held\n";
    return kExitOk;
  }
  out << "check: INVARIANT VIOLATION\n"
      << "seed=" << report.failing_seed << '\n'
      << "invariant=" << report.invariant << '\n'
      << "minimized instance:\n"
      << orders_to_csv(report.counterexample);
  return kExitInvariantViolation;
}

}  // namespace callmatch::cli
