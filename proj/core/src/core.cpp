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

#include "callmatch/core.hpp"

#include <algorithm>
#include <set>

#include "callmatch/errors.hpp"

namespace callmatch {

namespace {

template <typename Order>
void require_unique_ids(const std::vector<Order>& orders, Side side) {
  std::set<OrderId> seen;
  for (const Order& o : orders) {
    if (!seen.insert(o.id).second) {
      throw DuplicateIdError(side, o.id);
    }
  }
}

}  // namespace

Instance make_instance(std::vector<Bid> bids, std::vector<Ask> asks) {
  require_unique_ids(bids, Side::bid);
  require_unique_ids(asks, Side::ask);
  return Instance{std::move(bids), std::move(asks)};
}

std::vector<Bid> sort_bids_desc(std::vector<Bid> bids) {
  std::stable_sort(bids.begin(), bids.end(), [](const Bid& a, const Bid& b) {
    if (a.price != b.price) return a.price > b.price;
    return a.id < b.id;
  });
  return bids;
}

std::vector<Ask> sort_asks_asc(std::vector<Ask> asks) {
  std::stable_sort(asks.begin(), asks.end(), [](const Ask& a, const Ask& b) {
    if (a.price != b.price) return a.price < b.price;
    return a.id < b.id;
  });
  return asks;
}

std::vector<Ask> sort_asks_desc(std::vector<Ask> asks) {
  std::stable_sort(asks.begin(), asks.end(), [](const Ask& a, const Ask& b) {
    if (a.price != b.price) return a.price > b.price;
    return a.id < b.id;
  });
  return asks;
}

Matching sort_fills_by_bid_desc(Matching fills) {
  std::stable_sort(fills.begin(), fills.end(),
                   [](const Fill& a, const Fill& b) {
                     if (a.bid.price != b.bid.price)
                       return a.bid.price > b.bid.price;
                     return a.bid.id < b.bid.id;
                   });
  return fills;
}

Matching sort_fills_by_ask_asc(Matching fills) {
  std::stable_sort(fills.begin(), fills.end(),
                   [](const Fill& a, const Fill& b) {
                     if (a.ask.price != b.ask.price)
                       return a.ask.price < b.ask.price;
                     return a.ask.id < b.ask.id;
                   });
  return fills;
}

Count demand_at(std::span<const Bid> bids, Price p) {
  Count n = 0;
  for (const Bid& b : bids) {
    if (b.price >= p) ++n;
  }
  return n;
}

Count supply_at(std::span<const Ask> asks, Price p) {
  Count n = 0;
  for (const Ask& a : asks) {
    if (a.price <= p) ++n;
  }
  return n;
}

std::vector<Bid> bids_of(const Matching& m) {
  std::vector<Bid> out;
  out.reserve(m.size());
  for (const Fill& f : m) out.push_back(f.bid);
  return out;
}

std::vector<Ask> asks_of(const Matching& m) {
  std::vector<Ask> out;
  out.reserve(m.size());
  for (const Fill& f : m) out.push_back(f.ask);
  return out;
}

std::vector<Price> price_projection(std::span<const Bid> orders) {
  std::vector<Price> out;
  out.reserve(orders.size());
  for (const Bid& o : orders) out.push_back(o.price);
  return out;
}

std::vector<Price> price_projection(std::span<const Ask> orders) {
  std::vector<Price> out;
  out.reserve(orders.size());
  for (const Ask& o : orders) out.push_back(o.price);
  return out;
}

bool is_sublist(std::span<const Price> candidate,
                std::span<const Price> within) {
  std::size_t i = 0;
  for (std::size_t j = 0; i < candidate.size() && j < within.size(); ++j) {
    if (candidate[i] == within[j]) ++i;
  }
  return i == candidate.size();
}

}  // namespace callmatch
