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

#include "callmatch/types.hpp"

// Executable correctness predicates for matchings. These double as
// postcondition checks for the mechanisms and as verdict functions for the
// fuzz harness, so they are written against arbitrary (possibly invalid)
// matchings and never assume their own preconditions.

namespace callmatch {

/// Every fill pairs a bid with an ask it can afford: bid.price >= ask.price.
bool all_matchable(const Matching& m);

/// M is a valid matching of market (B, A): all fills matchable, each side of
/// M duplicate-free as records, and every matched order drawn from the
/// corresponding book (record membership; multiplicity is the duplicate-free
/// clause's job).
bool matching_in(std::span<const Bid> bids, std::span<const Ask> asks,
                 const Matching& m);

/// Individually rational: each trade price lies within its pair's
/// [ask.price, bid.price] interval.
bool is_ir(const Matching& m);

/// No bid strictly more competitive (higher-priced) than a matched bid may
/// be left unmatched.
bool fair_on_bids(const Matching& m, std::span<const Bid> bids);

/// No ask strictly more competitive (lower-priced) than a matched ask may be
/// left unmatched.
bool fair_on_asks(const Matching& m, std::span<const Ask> asks);

bool is_fair(const Matching& m, std::span<const Bid> bids,
             std::span<const Ask> asks);

/// All fills clear at one trade price (vacuously true when empty).
bool is_uniform(const Matching& m);

/// M is a valid matching of (B, A) of maximum cardinality. The quantifier
/// over all rival matchings is discharged by the independent oracle
/// (oracle::max_matching_size), not by this library's own mechanisms.
bool is_maximum(const Matching& m, std::span<const Bid> bids,
                std::span<const Ask> asks);

/// Volume accounting for a matching at one price point, together with the
/// truth values of the demand/supply bounds that any valid matching obeys.
///
/// The flags are only meaningful when matching_in(B, A, M) holds; the counts
/// are computed regardless.
struct VolumeBoundsReport {
  Price p{};

  Count matched_bids_above{};  // |B_M(>=p)|
  Count matched_asks_above{};  // |A_M(>=p)|
  Count matched_bids_below{};  // |B_M(<=p)|
  Count matched_asks_below{};  // |A_M(<=p)|
  Count demand{};              // |B(>=p)|
  Count supply{};              // |A(<=p)|
  Count fills{};               // |M|

  bool buyers_above_ok{};    // |B_M(>=p)| >= |A_M(>=p)|
  bool sellers_below_ok{};   // |B_M(<=p)| <= |A_M(<=p)|
  bool matched_bound_ok{};   // |M| <= |B_M(>=p)| + |A_M(<=p)|
  bool market_bound_ok{};    // |M| <= |B(>=p)| + |A(<=p)|

  bool all_ok() const {
    return buyers_above_ok && sellers_below_ok && matched_bound_ok &&
           market_bound_ok;
  }
};

/// Evaluates the four volume bounds at price p. Callers own the choice of
/// price grid; scanning {0} with all limit prices and max+1 covers every
/// step of the two counting functions.
VolumeBoundsReport volume_bounds_report(std::span<const Bid> bids,
                                        std::span<const Ask> asks,
                                        const Matching& m, Price p);

}  // namespace callmatch
