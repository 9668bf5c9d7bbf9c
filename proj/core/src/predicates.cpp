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

#include "callmatch/predicates.hpp"

#include <algorithm>
#include <set>

#include "callmatch/core.hpp"
#include "callmatch/oracle.hpp"

namespace callmatch {

namespace {

template <typename Order>
std::set<Order> record_set(std::span<const Order> orders) {
  return std::set<Order>(orders.begin(), orders.end());
}

}  // namespace

bool all_matchable(const Matching& m) {
  return std::all_of(m.begin(), m.end(), [](const Fill& f) {
    return f.bid.price >= f.ask.price;
  });
}

bool matching_in(std::span<const Bid> bids, std::span<const Ask> asks,
                 const Matching& m) {
  if (!all_matchable(m)) return false;

  std::set<Bid> matched_bids;
  std::set<Ask> matched_asks;
  for (const Fill& f : m) {
    if (!matched_bids.insert(f.bid).second) return false;
    if (!matched_asks.insert(f.ask).second) return false;
  }

  const auto book_bids = record_set(bids);
  const auto book_asks = record_set(asks);
  for (const Bid& b : matched_bids) {
    if (!book_bids.contains(b)) return false;
  }
  for (const Ask& a : matched_asks) {
    if (!book_asks.contains(a)) return false;
  }
  return true;
}

bool is_ir(const Matching& m) {
  return std::all_of(m.begin(), m.end(), [](const Fill& f) {
    return f.ask.price <= f.trade_price && f.trade_price <= f.bid.price;
  });
}

// A violation exists iff some order in the book is strictly more competitive
// than the least competitive matched order on its side and is itself
// unmatched. Only orders that actually belong to the book count as matched.
bool fair_on_bids(const Matching& m, std::span<const Bid> bids) {
  const auto book = record_set(bids);
  std::set<Bid> matched;
  bool any = false;
  Price least_matched = 0;
  for (const Fill& f : m) {
    if (!book.contains(f.bid)) continue;
    matched.insert(f.bid);
    least_matched = any ? std::min(least_matched, f.bid.price) : f.bid.price;
    any = true;
  }
  if (!any) return true;
  for (const Bid& b : bids) {
    if (b.price > least_matched && !matched.contains(b)) return false;
  }
  return true;
}

bool fair_on_asks(const Matching& m, std::span<const Ask> asks) {
  const auto book = record_set(asks);
  std::set<Ask> matched;
  bool any = false;
  Price most_matched = 0;
  for (const Fill& f : m) {
    if (!book.contains(f.ask)) continue;
    matched.insert(f.ask);
    most_matched = any ? std::max(most_matched, f.ask.price) : f.ask.price;
    any = true;
  }
  if (!any) return true;
  for (const Ask& a : asks) {
    if (a.price < most_matched && !matched.contains(a)) return false;
  }
  return true;
}

bool is_fair(const Matching& m, std::span<const Bid> bids,
             std::span<const Ask> asks) {
  return fair_on_asks(m, asks) && fair_on_bids(m, bids);
}

bool is_uniform(const Matching& m) {
  return std::all_of(m.begin(), m.end(), [&](const Fill& f) {
    return f.trade_price == m.front().trade_price;
  });
}

bool is_maximum(const Matching& m, std::span<const Bid> bids,
                std::span<const Ask> asks) {
  return matching_in(bids, asks, m) &&
         m.size() == oracle::max_matching_size(bids, asks);
}

VolumeBoundsReport volume_bounds_report(std::span<const Bid> bids,
                                        std::span<const Ask> asks,
                                        const Matching& m, Price p) {
  VolumeBoundsReport r;
  r.p = p;
  for (const Fill& f : m) {
    if (f.bid.price >= p) ++r.matched_bids_above;
    if (f.bid.price <= p) ++r.matched_bids_below;
    if (f.ask.price >= p) ++r.matched_asks_above;
    if (f.ask.price <= p) ++r.matched_asks_below;
  }
  r.demand = demand_at(bids, p);
  r.supply = supply_at(asks, p);
  r.fills = m.size();

  r.buyers_above_ok = r.matched_bids_above >= r.matched_asks_above;
  r.sellers_below_ok = r.matched_bids_below <= r.matched_asks_below;
  r.matched_bound_ok = r.fills <= r.matched_bids_above + r.matched_asks_below;
  r.market_bound_ok = r.fills <= r.demand + r.supply;
  return r;
}

}  // namespace callmatch
