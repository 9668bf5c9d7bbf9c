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

#include "order_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "callmatch/core.hpp"

namespace callmatch::cli {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string::size_type pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(pos)));
      break;
    }
    out.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();  // blank line
  return out;
}

std::uint64_t parse_u64(const std::string& field, std::size_t line,
                        const char* what) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError(line, std::string(what) + " out of range: " + field);
  }
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line, std::string("bad ") + what + ": '" + field + "'");
  }
  return value;
}

}  // namespace

Instance ingest_orders(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<Bid> bids;
  std::vector<Ask> asks;
  std::string line;
  std::size_t lineno = 0;
  bool maybe_header = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (maybe_header && fields[0] == "side") {
      maybe_header = false;
      continue;
    }
    maybe_header = false;
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected side,id,price");
    }
    const OrderId id = parse_u64(fields[1], lineno, "id");
    const Price price = parse_u64(fields[2], lineno, "price");
    if (fields[0] == "B") {
      bids.push_back(Bid{price, id});
    } else if (fields[0] == "A") {
      asks.push_back(Ask{price, id});
    } else {
      throw ParseError(lineno, "side must be B or A, got '" + fields[0] + "'");
    }
  }
  return make_instance(std::move(bids), std::move(asks));
}

void emit_fills(const Matching& m, std::ostream& os, Format format) {
  if (format == Format::csv) {
    os << "bid_id,ask_id,bid_price,ask_price,trade_price\n";
    for (const Fill& f : m) {
      os << f.bid.id << ',' << f.ask.id << ',' << f.bid.price << ','
         << f.ask.price << ',' << f.trade_price << '\n';
    }
    return;
  }
  nlohmann::ordered_json fills = nlohmann::ordered_json::array();
  for (const Fill& f : m) {
    fills.push_back({{"bid_id", f.bid.id},
                     {"ask_id", f.ask.id},
                     {"bid_price", f.bid.price},
                     {"ask_price", f.ask.price},
                     {"trade_price", f.trade_price}});
  }
  os << fills.dump(2) << '\n';
}

void emit_fills(const Matching& m, const std::filesystem::path& path,
                Format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  emit_fills(m, out, format);
  if (!out) throw IoError("write failed for " + path.string());
}

namespace {

Matching read_fills_csv(std::istream& in) {
  Matching m;
  std::string line;
  std::size_t lineno = 0;
  bool maybe_header = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (maybe_header && fields[0] == "bid_id") {
      maybe_header = false;
      continue;
    }
    maybe_header = false;
    if (fields.size() != 5) {
      throw ParseError(lineno,
                       "expected bid_id,ask_id,bid_price,ask_price,trade_price");
    }
    Fill f;
    f.bid.id = parse_u64(fields[0], lineno, "bid_id");
    f.ask.id = parse_u64(fields[1], lineno, "ask_id");
    f.bid.price = parse_u64(fields[2], lineno, "bid_price");
    f.ask.price = parse_u64(fields[3], lineno, "ask_price");
    f.trade_price = parse_u64(fields[4], lineno, "trade_price");
    m.push_back(f);
  }
  return m;
}

std::uint64_t json_u64(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_unsigned()) {
    throw ParseError(0, std::string("missing or non-integer field '") + key +
                            "'");
  }
  return obj[key].get<std::uint64_t>();
}

Matching read_fills_json(const std::string& text) {
  nlohmann::json fills;
  try {
    fills = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("bad JSON: ") + e.what());
  }
  if (!fills.is_array()) throw ParseError(0, "expected a JSON array of fills");
  Matching m;
  for (const auto& item : fills) {
    Fill f;
    f.bid.id = json_u64(item, "bid_id");
    f.ask.id = json_u64(item, "ask_id");
    f.bid.price = json_u64(item, "bid_price");
    f.ask.price = json_u64(item, "ask_price");
    f.trade_price = json_u64(item, "trade_price");
    m.push_back(f);
  }
  return m;
}

}  // namespace

Matching read_fills(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return read_fills_json(text);
  }
  std::istringstream csv(text);
  return read_fills_csv(csv);
}

std::string orders_to_csv(const Instance& instance) {
  std::ostringstream os;
  os << "side,id,price\n";
  for (const Bid& b : instance.bids) {
    os << "B," << b.id << ',' << b.price << '\n';
  }
  for (const Ask& a : instance.asks) {
    os << "A," << a.id << ',' << a.price << '\n';
  }
  return os.str();
}

}  // namespace callmatch::cli
