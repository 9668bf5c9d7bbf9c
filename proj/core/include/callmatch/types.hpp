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

#include <compare>
#include <cstdint>
#include <vector>

namespace callmatch {

/// Prices are integer ticks in the smallest monetary denomination.
/// Ids identify orders; uniqueness is enforced per side by make_instance.
using Price = std::uint64_t;
using OrderId = std::uint64_t;
using Count = std::size_t;

enum class Side { bid, ask };

/// A unit buy order. The limit price is the most the buyer will pay.
struct Bid {
  Price price{};
  OrderId id{};

  friend bool operator==(const Bid&, const Bid&) = default;
  friend auto operator<=>(const Bid&, const Bid&) = default;
};

/// A unit sell order. The limit price is the least the seller will accept.
struct Ask {
  Price price{};
  OrderId id{};

  friend bool operator==(const Ask&, const Ask&) = default;
  friend auto operator<=>(const Ask&, const Ask&) = default;
};

/// One matched bid-ask pair with an assigned trade price.
///
/// Matchability (bid.price >= ask.price) and individual rationality
/// (ask.price <= trade_price <= bid.price) are deliberately not type
/// invariants: the predicates evaluate fills whose status varies, and the
/// fairness transforms manipulate fills in intermediate states.
struct Fill {
  Bid bid{};
  Ask ask{};
  Price trade_price{};

  friend bool operator==(const Fill&, const Fill&) = default;
  friend auto operator<=>(const Fill&, const Fill&) = default;
};

/// An ordered collection of fills. Structural validity against a market
/// (duplicate-free sides, membership, matchability) is checked by
/// matching_in, not enforced here.
using Matching = std::vector<Fill>;

/// A market snapshot: every bid and ask collected for one auction.
/// Construct through make_instance, which validates id uniqueness per side.
struct Instance {
  std::vector<Bid> bids;
  std::vector<Ask> asks;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace callmatch
