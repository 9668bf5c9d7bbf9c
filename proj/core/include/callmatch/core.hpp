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

#include <span>
#include <vector>

#include "callmatch/types.hpp"

namespace callmatch {

/// Validates id uniqueness per side and returns the snapshot with input
/// order preserved. Throws DuplicateIdError.
Instance make_instance(std::vector<Bid> bids, std::vector<Ask> asks);

// Deterministic order: price first, then ascending id on equal prices.
// Every sort below is a permutation of its input and produces identical
// output for identical input, ties included.
std::vector<Bid> sort_bids_desc(std::vector<Bid> bids);
std::vector<Ask> sort_asks_asc(std::vector<Ask> asks);
std::vector<Ask> sort_asks_desc(std::vector<Ask> asks);

// Fill orderings used by the fairness transforms: by bid price (descending)
// or by ask price (ascending), ties by the corresponding order id.
Matching sort_fills_by_bid_desc(Matching fills);
Matching sort_fills_by_ask_asc(Matching fills);

/// Demand at price p: how many bids are willing to buy at p or higher.
Count demand_at(std::span<const Bid> bids, Price p);

/// Supply at price p: how many asks are willing to sell at p or lower.
Count supply_at(std::span<const Ask> asks, Price p);

// Projections of a matching onto its sides, in fill order. Duplicates, if
// present, are preserved so that matching_in can reject them.
std::vector<Bid> bids_of(const Matching& m);
std::vector<Ask> asks_of(const Matching& m);

std::vector<Price> price_projection(std::span<const Bid> orders);
std::vector<Price> price_projection(std::span<const Ask> orders);

/// True iff `candidate` is a (not necessarily contiguous) subsequence of
/// `within`.
bool is_sublist(std::span<const Price> candidate, std::span<const Price> within);

}  // namespace callmatch
