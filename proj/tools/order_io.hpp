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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "callmatch/types.hpp"

// Flat-file formats. Orders travel in one self-describing CSV (side,id,price
// with side B or A, header optional, whitespace trimmed); fills are emitted
// as CSV with the fixed column set bid_id,ask_id,bid_price,ask_price,
// trade_price or as a JSON array mirroring the same fields. Emission is
// byte-deterministic for identical inputs.

namespace callmatch::cli {

enum class Format { csv, json };

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}

  std::size_t line;
};

/// A numeric field does not fit the 64-bit tick/id range.
struct OverflowError : std::runtime_error {
  OverflowError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}

  std::size_t line;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses an order CSV and validates it into an Instance (line order
/// preserved). Throws ParseError, OverflowError, DuplicateIdError, IoError.
Instance ingest_orders(const std::filesystem::path& path);

void emit_fills(const Matching& m, std::ostream& os, Format format);
void emit_fills(const Matching& m, const std::filesystem::path& path,
                Format format);

/// Reads a fills file produced by emit_fills; the format is sniffed (a
/// leading '[' means JSON). Throws ParseError, OverflowError, IoError.
Matching read_fills(const std::filesystem::path& path);

/// Order CSV for an instance, header included; inverse of ingest_orders.
std::string orders_to_csv(const Instance& instance);

}  // namespace callmatch::cli
