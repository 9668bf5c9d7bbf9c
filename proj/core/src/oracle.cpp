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

#include "callmatch/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "callmatch/core.hpp"
#include "callmatch/errors.hpp"

namespace callmatch::oracle {

namespace {

// One round of Kuhn's augmenting-path search from bid `u`.
bool try_augment(std::size_t u, std::span<const Bid> bids,
                 std::span<const Ask> asks, std::vector<char>& visited,
                 std::vector<int>& ask_owner) {
  for (std::size_t v = 0; v < asks.size(); ++v) {
    if (visited[v] || bids[u].price < asks[v].price) continue;
    visited[v] = 1;
    if (ask_owner[v] < 0 ||
        try_augment(static_cast<std::size_t>(ask_owner[v]), bids, asks,
                    visited, ask_owner)) {
      ask_owner[v] = static_cast<int>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

Count max_matching_size(std::span<const Bid> bids, std::span<const Ask> asks) {
  std::vector<int> ask_owner(asks.size(), -1);
  Count matched = 0;
  for (std::size_t u = 0; u < bids.size(); ++u) {
    std::vector<char> visited(asks.size(), 0);
    if (try_augment(u, bids, asks, visited, ask_owner)) ++matched;
  }
  return matched;
}

Count max_uniform_size(std::span<const Bid> bids, std::span<const Ask> asks) {
  std::set<Price> grid;
  for (const Bid& b : bids) grid.insert(b.price);
  for (const Ask& a : asks) grid.insert(a.price);
  Count best = 0;
  for (Price p : grid) {
    best = std::max(best, std::min(demand_at(bids, p), supply_at(asks, p)));
  }
  return best;
}

namespace {

void enumerate_from(std::size_t bid_index, std::span<const Bid> bids,
                    std::span<const Ask> asks, std::uint32_t used_asks,
                    Matching& current, const MatchingVisitor& visit,
                    const TradePricePolicy& trade_price) {
  if (bid_index == bids.size()) {
    visit(current);
    return;
  }
  // Leave this bid unmatched.
  enumerate_from(bid_index + 1, bids, asks, used_asks, current, visit,
                 trade_price);
  // Or pair it with any free matchable ask.
  for (std::size_t v = 0; v < asks.size(); ++v) {
    if ((used_asks >> v) & 1u) continue;
    if (bids[bid_index].price < asks[v].price) continue;
    current.push_back(Fill{bids[bid_index], asks[v],
                           trade_price(bids[bid_index], asks[v])});
    enumerate_from(bid_index + 1, bids, asks, used_asks | (1u << v), current,
                   visit, trade_price);
    current.pop_back();
  }
}

}  // namespace

void enumerate_matchings(std::span<const Bid> bids, std::span<const Ask> asks,
                         const MatchingVisitor& visit,
                         const TradePricePolicy& trade_price) {
  const Count largest = std::max(bids.size(), asks.size());
  if (largest > kEnumerationSideLimit) {
    throw TooLargeError(largest, kEnumerationSideLimit);
  }
  Matching current;
  enumerate_from(0, bids, asks, 0, current, visit, trade_price);
}

void enumerate_matchings(std::span<const Bid> bids, std::span<const Ask> asks,
                         const MatchingVisitor& visit) {
  enumerate_matchings(bids, asks, visit,
                      [](const Bid&, const Ask& a) { return a.price; });
}

bool uniform_ir_realizable(const Matching& m) {
  if (m.empty()) return true;
  Price highest_ask = m.front().ask.price;
  Price lowest_bid = m.front().bid.price;
  for (const Fill& f : m) {
    highest_ask = std::max(highest_ask, f.ask.price);
    lowest_bid = std::min(lowest_bid, f.bid.price);
  }
  return highest_ask <= lowest_bid;
}

bool fair_on_bids_by_threshold(const Matching& m, std::span<const Bid> bids) {
  const std::set<Bid> book(bids.begin(), bids.end());
  std::set<Bid> matched_records;
  for (const Fill& f : m) {
    if (book.contains(f.bid)) matched_records.insert(f.bid);
  }
  std::vector<Price> matched;
  for (const Bid& b : matched_records) matched.push_back(b.price);
  for (const Bid& b : bids) {
    const Price t = b.price;
    const bool below_matched =
        std::any_of(matched.begin(), matched.end(),
                    [t](Price p) { return p < t; });
    if (!below_matched) continue;
    const Count book_at_or_above = demand_at(bids, t);
    const Count matched_at_or_above = static_cast<Count>(
        std::count_if(matched.begin(), matched.end(),
                      [t](Price p) { return p >= t; }));
    if (matched_at_or_above != book_at_or_above) return false;
  }
  return true;
}

bool fair_on_asks_by_threshold(const Matching& m, std::span<const Ask> asks) {
  const std::set<Ask> book(asks.begin(), asks.end());
  std::set<Ask> matched_records;
  for (const Fill& f : m) {
    if (book.contains(f.ask)) matched_records.insert(f.ask);
  }
  std::vector<Price> matched;
  for (const Ask& a : matched_records) matched.push_back(a.price);
  for (const Ask& a : asks) {
    const Price t = a.price;
    const bool above_matched =
        std::any_of(matched.begin(), matched.end(),
                    [t](Price p) { return p > t; });
    if (!above_matched) continue;
    const Count book_at_or_below = supply_at(asks, t);
    const Count matched_at_or_below = static_cast<Count>(
        std::count_if(matched.begin(), matched.end(),
                      [t](Price p) { return p <= t; }));
    if (matched_at_or_below != book_at_or_below) return false;
  }
  return true;
}

bool is_fair_by_threshold(const Matching& m, std::span<const Bid> bids,
                          std::span<const Ask> asks) {
  return fair_on_asks_by_threshold(m, asks) &&
         fair_on_bids_by_threshold(m, bids);
}

Instance gen_instance(const GenParams& params) {
  constexpr std::uint64_t kDrawLimit = std::uint64_t{1} << 32;
  if (params.max_price == 0) {
    throw std::invalid_argument("gen_instance: max_price must be >= 1");
  }
  if (params.max_price >= kDrawLimit ||
      params.max_orders_per_side >= kDrawLimit) {
    throw std::invalid_argument(
        "gen_instance: bounds must fit the generator's 32-bit output word");
  }
  if (!params.allow_price_ties &&
      2 * params.max_orders_per_side > params.max_price + 1) {
    throw std::invalid_argument(
        "gen_instance: distinct prices need max_price + 1 >= twice "
        "max_orders_per_side");
  }

  Lcg64 rng(params.seed);
  const Count n_bids = rng.next_in(params.max_orders_per_side);
  const Count n_asks = rng.next_in(params.max_orders_per_side);

  std::set<Price> used;
  auto draw_price = [&]() -> Price {
    Price p = rng.next_in(params.max_price);
    if (!params.allow_price_ties) {
      while (!used.insert(p).second) p = rng.next_in(params.max_price);
    }
    return p;
  };

  Instance out;
  out.bids.reserve(n_bids);
  out.asks.reserve(n_asks);
  for (Count i = 0; i < n_bids; ++i) {
    out.bids.push_back(Bid{draw_price(), static_cast<OrderId>(i + 1)});
  }
  for (Count i = 0; i < n_asks; ++i) {
    out.asks.push_back(Ask{draw_price(), static_cast<OrderId>(i + 1)});
  }
  return out;
}

}  // namespace callmatch::oracle
