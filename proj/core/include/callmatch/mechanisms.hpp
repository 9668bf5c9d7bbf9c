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

#include <optional>
#include <span>

#include "callmatch/types.hpp"

// The matching mechanisms. All of them are pure functions over immutable
// inputs; sortedness preconditions are stated per function and verified by a
// linear scan where noted (skippable, but every guarantee about the output
// is void on unsorted input, so silent acceptance would mask caller bugs).

namespace callmatch {

/// Counters describing one mechanism run.
struct MatchStats {
  Count head_comparisons = 0;
};

/// Replaces the i-th fill's bid with the i-th bid of `bids`, keeping asks
/// and trade prices. With both sequences sorted non-increasing by bid price
/// and the fills forming a matching within the book, the result is fair on
/// bids. Truncates if `bids` is shorter than the matching.
Matching make_fair_on_bids(const Matching& m_by_bid_desc,
                           std::span<const Bid> bids_desc);

/// Mirror of make_fair_on_bids: replaces asks, keeping bids and trade
/// prices. Expects both sequences sorted non-decreasing by ask price.
Matching make_fair_on_asks(const Matching& m_by_ask_asc,
                           std::span<const Ask> asks_asc);

/// Rewrites a valid matching of (B, A) into a fair one of equal size: sorts
/// fills and bids by descending bid price for make_fair_on_bids, then fills
/// and asks by ascending ask price for make_fair_on_asks. Trade prices
/// travel with their fills (the multiset is preserved); individual
/// rationality of the input may not survive the re-pairing — compose with
/// ir_middle when IR output is required.
///
/// Throws InvalidMatchingError when matching_in(B, A, M) fails.
Matching fairize(const Matching& m, std::span<const Bid> bids,
                 std::span<const Ask> asks);

/// Re-prices every fill at the floor midpoint of its [ask, bid] interval,
/// leaving the pairs untouched. The result is always individually rational.
/// Throws NotMatchableError when some fill has bid.price < ask.price.
Matching ir_middle(const Matching& m);

/// Maximum matching. Walks both books from their most competitive end
/// (bids and asks both sorted non-increasing by price): a head ask that the
/// best remaining bid cannot afford is dropped for good; otherwise the heads
/// pair at the bid's limit price. The output is a maximum-cardinality
/// matching, fair on bids and individually rational by construction.
///
/// Performs at most |bids| + |asks| head comparisons (reported via `stats`).
/// Throws UnsortedInputError when `check_sorted` and an input is out of
/// order.
Matching produce_mm(std::span<const Bid> bids_desc,
                    std::span<const Ask> asks_desc, bool check_sorted = true,
                    MatchStats* stats = nullptr);

/// produce_mm followed by make_fair_on_asks (with the re-sorting fairize
/// uses): a maximum matching that is fair on both sides. Accepts books in
/// any order; sorts internally. Ids must be unique per side.
Matching fair_mm(std::span<const Bid> bids, std::span<const Ask> asks);

/// Pairs the best remaining bid with the cheapest remaining ask while the
/// pair is matchable (bids sorted non-increasing, asks non-decreasing),
/// stopping at the first head pair that is not. Trade prices are the bid
/// limit prices; produce_um rewrites them.
Matching pair_uniform(std::span<const Bid> bids_desc,
                      std::span<const Ask> asks_asc, bool check_sorted = true);

/// The clearing price of the uniform-price auction: the bid limit price of
/// the last pair formed by pair_uniform. Absent when nothing crosses.
std::optional<Price> uniform_price(std::span<const Bid> bids_desc,
                                   std::span<const Ask> asks_asc,
                                   bool check_sorted = true);

/// The uniform-price auction: every pair_uniform fill re-priced at the
/// single clearing price. The output is uniform, individually rational,
/// fair, and of maximum cardinality among all uniform-and-IR matchings.
Matching produce_um(std::span<const Bid> bids_desc,
                    std::span<const Ask> asks_asc, bool check_sorted = true);

}  // namespace callmatch
