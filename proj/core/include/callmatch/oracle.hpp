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

#include <cstdint>
#include <functional>
#include <span>

#include "callmatch/types.hpp"

// Independent reference computations, kept deliberately free of the
// mechanisms they are used to judge. They discharge the "for all matchings"
// side of the correctness claims at desk scale: a graph-theoretic maximum,
// a demand/supply scan, and plain exhaustive enumeration.

namespace callmatch::oracle {

/// Size of a maximum matching in the bipartite graph whose edges are the
/// matchable bid-ask pairs (bid.price >= ask.price). Augmenting-path search;
/// insensitive to input order; shares no code with produce_mm.
Count max_matching_size(std::span<const Bid> bids, std::span<const Ask> asks);

/// Largest size of any matching that is simultaneously uniform and
/// individually rational: max over limit prices p of
/// min(demand_at(bids, p), supply_at(asks, p)).
///
/// Scanning only limit prices is exhaustive: both counting functions are
/// constant on the open intervals between consecutive limit prices, and on
/// such an interval the demand is what it is at the next limit price up
/// while the supply is what it is at the next one down, so an interior p
/// can never beat both endpoints. Any (demand, supply) pair at p is
/// realizable by pairing the top min(d, s) bids with the cheapest asks, all
/// priced at p.
Count max_uniform_size(std::span<const Bid> bids, std::span<const Ask> asks);

/// Hard cap on enumerate_matchings input sides.
inline constexpr Count kEnumerationSideLimit = 6;

using MatchingVisitor = std::function<void(const Matching&)>;
using TradePricePolicy = std::function<Price(const Bid&, const Ask&)>;

/// Visits every valid matching of (bids, asks) exactly once: every injective
/// partial pairing over matchable pairs, including the empty one. Trade
/// prices come from the policy (the two-argument overload prices at the ask).
/// Throws TooLargeError when a side exceeds kEnumerationSideLimit.
void enumerate_matchings(std::span<const Bid> bids, std::span<const Ask> asks,
                         const MatchingVisitor& visit,
                         const TradePricePolicy& trade_price);
void enumerate_matchings(std::span<const Bid> bids, std::span<const Ask> asks,
                         const MatchingVisitor& visit);

/// True iff the fills admit a single trade price that is individually
/// rational for every pair: max ask price <= min bid price over the fills.
/// Empty matchings qualify. Looks only at the pairing, not the stored
/// trade prices.
bool uniform_ir_realizable(const Matching& m);

// Reference forms of the fairness predicates, used to cross-check the
// record-membership definitions. They work on price multisets: for each
// threshold t drawn from the book's limit prices, once any bid strictly
// below t is matched, every bid at or above t must be matched (mirrored
// for asks).
bool fair_on_bids_by_threshold(const Matching& m, std::span<const Bid> bids);
bool fair_on_asks_by_threshold(const Matching& m, std::span<const Ask> asks);
bool is_fair_by_threshold(const Matching& m, std::span<const Bid> bids,
                          std::span<const Ask> asks);

/// Deterministic pseudo-random instance description.
struct GenParams {
  std::uint64_t seed = 0;
  Count max_orders_per_side = 0;  // side sizes drawn uniformly in [0, max]
  Price max_price = 1;            // prices drawn uniformly in [0, max]
  bool allow_price_ties = true;   // false: all prices distinct instance-wide
};

/// 64-bit linear congruential generator (Knuth's MMIX multiplier
/// 6364136223846793005 and increment 1442695040888963407); the output word
/// is the top 32 bits of the state after each step. Spelled out so golden
/// seeds reproduce in any implementation.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 32;
  }

  /// Uniform draw in [0, bound] via next() % (bound + 1). The output word is
  /// 32 bits, so bound must stay below 2^32; gen_instance validates this.
  std::uint64_t next_in(std::uint64_t bound) {
    return next() % (bound + 1);
  }

 private:
  std::uint64_t state_;
};

/// Generates an instance from params: draws the bid count, the ask count,
/// then bid prices and ask prices in that order, with ids numbered 1..n per
/// side. Same params give the identical instance on every platform. With
/// allow_price_ties false, already-used prices are redrawn; the price range
/// must then exceed the worst-case order count (throws std::invalid_argument
/// otherwise, as does max_price == 0).
Instance gen_instance(const GenParams& params);

}  // namespace callmatch::oracle
