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

#include <stdexcept>
#include <string>

#include "callmatch/types.hpp"

namespace callmatch {

/// Two orders on the same side share an id.
struct DuplicateIdError : std::runtime_error {
  DuplicateIdError(Side side, OrderId id)
      : std::runtime_error(std::string("duplicate ") +
                           (side == Side::bid ? "bid" : "ask") + " id " +
                           std::to_string(id)),
        side(side),
        id(id) {}

  Side side;
  OrderId id;
};

/// A matching failed validation against the market it claims to trade in.
struct InvalidMatchingError : std::runtime_error {
  explicit InvalidMatchingError(const std::string& what)
      : std::runtime_error("invalid matching: " + what) {}
};

/// A fill pairs a bid with an ask priced above it.
struct NotMatchableError : std::runtime_error {
  NotMatchableError(Price bid_price, Price ask_price)
      : std::runtime_error("unmatchable fill: bid " +
                           std::to_string(bid_price) + " < ask " +
                           std::to_string(ask_price)),
        bid_price(bid_price),
        ask_price(ask_price) {}

  Price bid_price;
  Price ask_price;
};

/// An order list violates the sort order a mechanism requires.
struct UnsortedInputError : std::runtime_error {
  explicit UnsortedInputError(const std::string& what)
      : std::runtime_error("unsorted input: " + what) {}
};

/// An exhaustive operation was asked to run beyond its size guard.
struct TooLargeError : std::runtime_error {
  TooLargeError(Count size, Count limit)
      : std::runtime_error("instance too large for enumeration: side of " +
                           std::to_string(size) + " exceeds limit " +
                           std::to_string(limit)),
        size(size),
        limit(limit) {}

  Count size;
  Count limit;
};

}  // namespace callmatch
