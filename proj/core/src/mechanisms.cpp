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

#include "callmatch/mechanisms.hpp"

#include <algorithm>

#include "callmatch/core.hpp"
#include "callmatch/errors.hpp"
#include "callmatch/predicates.hpp"

namespace callmatch {

namespace {

void require_bids_desc(std::span<const Bid> bids) {
  for (std::size_t i = 1; i < bids.size(); ++i) {
    if (bids[i - 1].price < bids[i].price) {
      throw UnsortedInputError("bids must be non-increasing by price");
    }
  }
}

void require_asks_desc(std::span<const Ask> asks) {
  for (std::size_t i = 1; i < asks.size(); ++i) {
    if (asks[i - 1].price < asks[i].price) {
      throw UnsortedInputError("asks must be non-increasing by price");
    }
  }
}

void require_asks_asc(std::span<const Ask> asks) {
  for (std::size_t i = 1; i < asks.size(); ++i) {
    if (asks[i - 1].price > asks[i].price) {
      throw UnsortedInputError("asks must be non-decreasing by price");
    }
  }
}

}  // namespace

Matching make_fair_on_bids(const Matching& m_by_bid_desc,
                           std::span<const Bid> bids_desc) {
  const std::size_t n = std::min(m_by_bid_desc.size(), bids_desc.size());
  Matching out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Fill{bids_desc[i], m_by_bid_desc[i].ask,
                       m_by_bid_desc[i].trade_price});
  }
  return out;
}

Matching make_fair_on_asks(const Matching& m_by_ask_asc,
                           std::span<const Ask> asks_asc) {
  const std::size_t n = std::min(m_by_ask_asc.size(), asks_asc.size());
  Matching out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Fill{m_by_ask_asc[i].bid, asks_asc[i],
                       m_by_ask_asc[i].trade_price});
  }
  return out;
}

Matching fairize(const Matching& m, std::span<const Bid> bids,
                 std::span<const Ask> asks) {
  if (!matching_in(bids, asks, m)) {
    throw InvalidMatchingError("fairize requires a valid matching of its book");
  }
  // A valid matching never outnumbers either book, so neither pass truncates.
  Matching on_bids =
      make_fair_on_bids(sort_fills_by_bid_desc(m),
                        sort_bids_desc({bids.begin(), bids.end()}));
  return make_fair_on_asks(sort_fills_by_ask_asc(std::move(on_bids)),
                           sort_asks_asc({asks.begin(), asks.end()}));
}

Matching ir_middle(const Matching& m) {
  for (const Fill& f : m) {
    if (f.bid.price < f.ask.price) {
      throw NotMatchableError(f.bid.price, f.ask.price);
    }
  }
  Matching out;
  out.reserve(m.size());
  for (const Fill& f : m) {
    // floor((bid + ask) / 2) without overflow; ask <= bid here.
    const Price mid = f.ask.price + (f.bid.price - f.ask.price) / 2;
    out.push_back(Fill{f.bid, f.ask, mid});
  }
  return out;
}

Matching produce_mm(std::span<const Bid> bids_desc,
                    std::span<const Ask> asks_desc, bool check_sorted,
                    MatchStats* stats) {
  if (check_sorted) {
    require_bids_desc(bids_desc);
    require_asks_desc(asks_desc);
  }
  Matching out;
  Count comparisons = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < bids_desc.size() && j < asks_desc.size()) {
    ++comparisons;
    if (asks_desc[j].price <= bids_desc[i].price) {
      out.push_back(Fill{bids_desc[i], asks_desc[j], bids_desc[i].price});
      ++i;
      ++j;
    } else {
      // This ask is above the best remaining bid; cheaper asks may follow.
      ++j;
    }
  }
  if (stats != nullptr) stats->head_comparisons = comparisons;
  return out;
}

Matching fair_mm(std::span<const Bid> bids, std::span<const Ask> asks) {
  const std::vector<Bid> bids_desc = sort_bids_desc({bids.begin(), bids.end()});
  const std::vector<Ask> asks_desc = sort_asks_desc({asks.begin(), asks.end()});
  Matching mm = produce_mm(bids_desc, asks_desc, /*check_sorted=*/false);
  return make_fair_on_asks(sort_fills_by_ask_asc(std::move(mm)),
                           sort_asks_asc({asks.begin(), asks.end()}));
}

Matching pair_uniform(std::span<const Bid> bids_desc,
                      std::span<const Ask> asks_asc, bool check_sorted) {
  if (check_sorted) {
    require_bids_desc(bids_desc);
    require_asks_asc(asks_asc);
  }
  Matching out;
  const std::size_t n = std::min(bids_desc.size(), asks_asc.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (asks_asc[k].price > bids_desc[k].price) break;
    out.push_back(Fill{bids_desc[k], asks_asc[k], bids_desc[k].price});
  }
  return out;
}

std::optional<Price> uniform_price(std::span<const Bid> bids_desc,
                                   std::span<const Ask> asks_asc,
                                   bool check_sorted) {
  const Matching pairs = pair_uniform(bids_desc, asks_asc, check_sorted);
  if (pairs.empty()) return std::nullopt;
  return pairs.back().bid.price;
}

Matching produce_um(std::span<const Bid> bids_desc,
                    std::span<const Ask> asks_asc, bool check_sorted) {
  Matching pairs = pair_uniform(bids_desc, asks_asc, check_sorted);
  if (pairs.empty()) return pairs;
  const Price clearing = pairs.back().bid.price;
  for (Fill& f : pairs) f.trade_price = clearing;
  return pairs;
}

}  // namespace callmatch
