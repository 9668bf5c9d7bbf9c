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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "callmatch/errors.hpp"
#include "check_harness.hpp"
#include "commands.hpp"
#include "order_io.hpp"
#include "testdata.hpp"

using namespace callmatch;
using namespace callmatch::cli;

TEST_CASE("ingest parses the flat order format") {
  testdata::TempDir tmp;
  const auto path = tmp.path("orders.csv");

  testdata::write_text(path, "B,1,100\nB,2,80\nA,1,90\nA,2,70\n");
  CHECK(ingest_orders(path) == testdata::two_by_two_market());

  // Header, blank lines, and stray whitespace are all tolerated.
  testdata::write_text(path,
                       "side,id,price\n\n  B , 1 , 100 \nB,2,80\r\n"
                       "A,1,90\nA,2,70\n");
  CHECK(ingest_orders(path) == testdata::two_by_two_market());

  testdata::write_text(path, "");
  const Instance empty = ingest_orders(path);
  CHECK(empty.bids.empty());
  CHECK(empty.asks.empty());
}

TEST_CASE("ingest rejects malformed input") {
  testdata::TempDir tmp;
  const auto path = tmp.path("orders.csv");

  testdata::write_text(path, "B,1,100\nB,1,90\n");
  CHECK_THROWS_AS(ingest_orders(path), DuplicateIdError);

  testdata::write_text(path, "B,1,100\nX,2,90\n");
  try {
    ingest_orders(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  testdata::write_text(path, "B,1\n");
  CHECK_THROWS_AS(ingest_orders(path), ParseError);

  testdata::write_text(path, "B,1,12x\n");
  CHECK_THROWS_AS(ingest_orders(path), ParseError);

  testdata::write_text(path, "B,1,-5\n");
  CHECK_THROWS_AS(ingest_orders(path), ParseError);

  testdata::write_text(path, "B,1,99999999999999999999999\n");
  CHECK_THROWS_AS(ingest_orders(path), OverflowError);

  CHECK_THROWS_AS(ingest_orders(tmp.path("missing.csv")), IoError);
}

TEST_CASE("emit writes the fixed CSV column set") {
  const Matching one{Fill{Bid{100, 1}, Ask{70, 2}, 100}};
  std::ostringstream os;
  emit_fills(one, os, Format::csv);
  CHECK(os.str() ==
        "bid_id,ask_id,bid_price,ask_price,trade_price\n1,2,100,70,100\n");

  std::ostringstream empty;
  emit_fills({}, empty, Format::csv);
  CHECK(empty.str() == "bid_id,ask_id,bid_price,ask_price,trade_price\n");

  testdata::TempDir tmp;
  CHECK_THROWS_AS(
      emit_fills(one, tmp.path("no_such_dir") / "fills.csv", Format::csv),
      IoError);
}

TEST_CASE("the uniform auction on the 8x8 market emits four fills at 91") {
  testdata::TempDir tmp;
  const auto orders = tmp.path("orders.csv");
  testdata::write_text(orders, orders_to_csv(testdata::eight_by_eight_market()));

  RunConfig config;
  config.algorithm = Algorithm::um;
  config.input = orders;
  config.output = tmp.path("fills.csv");
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(run_match(config, out, err) == kExitOk);
  CHECK(testdata::read_text(*config.output) ==
        "bid_id,ask_id,bid_price,ask_price,trade_price\n"
        "8,1,125,53,91\n"
        "7,2,120,79,91\n"
        "6,3,112,85,91\n"
        "5,4,91,90,91\n");
  CHECK(out.str() ==
        "matched=4 uniform_price=91 ir=true fair=true maximum=false\n");
}

TEST_CASE("emit mirrors the same fields as JSON") {
  const Matching one{Fill{Bid{100, 1}, Ask{70, 2}, 100}};
  std::ostringstream os;
  emit_fills(one, os, Format::json);
  CHECK(os.str() == R"([
  {
    "bid_id": 1,
    "ask_id": 2,
    "bid_price": 100,
    "ask_price": 70,
    "trade_price": 100
  }
])"
                    "\n");

  std::ostringstream empty;
  emit_fills({}, empty, Format::json);
  CHECK(empty.str() == "[]\n");
}

TEST_CASE("fills round-trip through both formats") {
  testdata::TempDir tmp;
  const Matching m{Fill{Bid{125, 8}, Ask{53, 1}, 91},
                   Fill{Bid{91, 5}, Ask{90, 4}, 91}};
  for (Format f : {Format::csv, Format::json}) {
    const auto path = tmp.path(f == Format::csv ? "fills.csv" : "fills.json");
    emit_fills(m, path, f);
    CHECK(read_fills(path) == m);
  }
}

TEST_CASE("read_fills rejects malformed files") {
  testdata::TempDir tmp;
  const auto path = tmp.path("fills");

  testdata::write_text(path, "[{\"bid_id\": 1}]");  // missing fields
  CHECK_THROWS_AS(read_fills(path), ParseError);

  testdata::write_text(path, "[{]");  // not JSON at all
  CHECK_THROWS_AS(read_fills(path), ParseError);

  testdata::write_text(path, "{\"bid_id\": 1}");  // object, not an array...
  CHECK_THROWS_AS(read_fills(path), ParseError);   // ...parsed as CSV -> bad

  testdata::write_text(path, "1,2,100,70\n");  // short CSV row
  CHECK_THROWS_AS(read_fills(path), ParseError);

  testdata::write_text(path,
                       "[{\"bid_id\": -1, \"ask_id\": 2, \"bid_price\": 1, "
                       "\"ask_price\": 1, \"trade_price\": 1}]");
  CHECK_THROWS_AS(read_fills(path), ParseError);  // negative id
}

TEST_CASE("orders_to_csv inverts ingest") {
  testdata::TempDir tmp;
  const Instance market = testdata::eight_by_eight_market();
  const auto path = tmp.path("orders.csv");
  testdata::write_text(path, orders_to_csv(market));
  CHECK(ingest_orders(path) == market);
}

TEST_CASE("run_match drives each algorithm and prints the summary") {
  testdata::TempDir tmp;
  const auto orders = tmp.path("orders.csv");
  testdata::write_text(orders, "B,1,100\nB,2,80\nA,1,90\nA,2,70\n");

  RunConfig config;
  config.input = orders;
  config.output = tmp.path("fills.csv");

  std::ostringstream out;
  std::ostringstream err;

  config.algorithm = Algorithm::um;
  CHECK(run_match(config, out, err) == kExitOk);
  CHECK(out.str() ==
        "matched=1 uniform_price=100 ir=true fair=true maximum=false\n");
  CHECK(testdata::read_text(*config.output) ==
        "bid_id,ask_id,bid_price,ask_price,trade_price\n1,2,100,70,100\n");

  out.str("");
  config.algorithm = Algorithm::mm;
  CHECK(run_match(config, out, err) == kExitOk);
  CHECK(out.str() ==
        "matched=2 uniform_price=- ir=true fair=true maximum=true\n");

  out.str("");
  config.algorithm = Algorithm::fair_mm;  // midpoint-priced
  CHECK(run_match(config, out, err) == kExitOk);
  CHECK(out.str() ==
        "matched=2 uniform_price=- ir=true fair=true maximum=true\n");
  CHECK(testdata::read_text(*config.output) ==
        "bid_id,ask_id,bid_price,ask_price,trade_price\n"
        "2,2,80,70,75\n1,1,100,90,95\n");

  out.str("");
  config.algorithm = Algorithm::ir_middle;
  CHECK(run_match(config, out, err) == kExitOk);
  CHECK(testdata::read_text(*config.output) ==
        "bid_id,ask_id,bid_price,ask_price,trade_price\n"
        "1,1,100,90,95\n2,2,80,70,75\n");

  out.str("");
  config.algorithm = Algorithm::fairize;
  CHECK(run_match(config, out, err) == kExitOk);
  CHECK(run_verify(orders, *config.output, out, err) == kExitOk);
}

TEST_CASE("run_match on an empty book") {
  testdata::TempDir tmp;
  const auto orders = tmp.path("orders.csv");
  testdata::write_text(orders, "");

  RunConfig config;
  config.input = orders;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_match(config, out, err) == kExitOk);
  CHECK(out.str() ==
        "bid_id,ask_id,bid_price,ask_price,trade_price\n"
        "matched=0 uniform_price=- ir=true fair=true maximum=true\n");
}

TEST_CASE("run_match failures exit with the validation code") {
  testdata::TempDir tmp;
  RunConfig config;
  config.input = tmp.path("missing.csv");
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_match(config, out, err) == kExitValidation);
  CHECK(err.str().find("match:") == 0);

  const auto bad = tmp.path("bad.csv");
  testdata::write_text(bad, "B,1,100\nB,1,90\n");
  config.input = bad;
  CHECK(run_match(config, out, err) == kExitValidation);
}

TEST_CASE("identical runs produce byte-identical outputs") {
  testdata::TempDir tmp;
  const auto orders = tmp.path("orders.csv");
  testdata::write_text(orders, orders_to_csv(testdata::eight_by_eight_market()));

  for (Algorithm algo : {Algorithm::mm, Algorithm::fair_mm, Algorithm::um,
                         Algorithm::fairize, Algorithm::ir_middle}) {
    RunConfig config;
    config.algorithm = algo;
    config.input = orders;
    std::ostringstream err;

    config.output = tmp.path("a.csv");
    std::ostringstream out_a;
    REQUIRE(run_match(config, out_a, err) == kExitOk);

    config.output = tmp.path("b.csv");
    std::ostringstream out_b;
    REQUIRE(run_match(config, out_b, err) == kExitOk);

    CHECK(testdata::read_text(tmp.path("a.csv")) ==
          testdata::read_text(tmp.path("b.csv")));
    CHECK(out_a.str() == out_b.str());
  }
}

TEST_CASE("verify accepts emitted fills and rejects tampered ones") {
  testdata::TempDir tmp;
  const auto orders = tmp.path("orders.csv");
  testdata::write_text(orders, orders_to_csv(testdata::eight_by_eight_market()));

  RunConfig config;
  config.algorithm = Algorithm::um;
  config.input = orders;
  config.output = tmp.path("fills.csv");
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(run_match(config, out, err) == kExitOk);

  out.str("");
  CHECK(run_verify(orders, *config.output, out, err) == kExitOk);
  CHECK(out.str() == "verify: ok fills=4\n");

  // A fill that references an order not in the book must be rejected.
  auto text = testdata::read_text(*config.output);
  const auto tampered = tmp.path("tampered.csv");
  testdata::write_text(tampered,
                       text + "3,3,999,85,91\n");
  out.str("");
  CHECK(run_verify(orders, tampered, out, err) == kExitValidation);
  CHECK(out.str().find("verify: FAILED") == 0);
}

TEST_CASE("parse_algorithm and parse_mutation cover their vocabularies") {
  CHECK(parse_algorithm("mm") == Algorithm::mm);
  CHECK(parse_algorithm("fair-mm") == Algorithm::fair_mm);
  CHECK(parse_algorithm("um") == Algorithm::um);
  CHECK(parse_algorithm("fairize") == Algorithm::fairize);
  CHECK(parse_algorithm("ir-middle") == Algorithm::ir_middle);
  CHECK_FALSE(parse_algorithm("nope").has_value());

  CHECK(parse_mutation("mm-strict") == Mutation::mm_strict);
  CHECK(parse_mutation("um-skip") == Mutation::um_skip);
  CHECK(parse_mutation("um-reuse") == Mutation::um_reuse_ask);
  CHECK_FALSE(parse_mutation("nope").has_value());
}

TEST_CASE("check campaign holds on the real mechanisms") {
  CheckConfig config;
  config.seeds = 150;
  config.seed_base = 1;
  config.max_orders_per_side = 8;
  config.max_price = 20;
  config.allow_price_ties = true;

  const CheckReport report = run_check(config);
  CHECK(report.ok);
  CHECK(report.seeds_run == 150);

  std::ostringstream out;
  CHECK(run_check_command(config, out) == kExitOk);
  CHECK(out.str() == "check: 150 seeds, all invariants held\n");
}

TEST_CASE("a zero-seed campaign passes trivially") {
  CheckConfig config;
  config.seeds = 0;
  const CheckReport report = run_check(config);
  CHECK(report.ok);
  CHECK(report.seeds_run == 0);
}

TEST_CASE("usage errors exit with code 1") {
  const std::string cli = CALLMATCH_CLI_PATH;
  auto exit_code = [&](const std::string& args) {
    const int status =
        std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return status < 0 ? -1 : WEXITSTATUS(status);
  };
  CHECK(exit_code("match") == kExitUsage);              // missing --input
  CHECK(exit_code("bogus") == kExitUsage);              // unknown subcommand
  CHECK(exit_code("") == kExitUsage);                   // subcommand required
  CHECK(exit_code("--help") == kExitOk);
  CHECK(exit_code("match --algo nope --input x") == kExitUsage);
  CHECK(exit_code("check --mutate nope") == kExitUsage);
}

TEST_CASE("check campaign catches seeded faults and minimizes the instance") {
  CheckConfig config;
  config.seeds = 400;
  config.max_orders_per_side = 8;
  config.max_price = 15;
  config.allow_price_ties = true;

  config.mutation = Mutation::mm_strict;
  const CheckReport strict = run_check(config);
  REQUIRE_FALSE(strict.ok);
  CHECK(strict.invariant == "produce_mm.maximum");
  // The shrunk witness is a single crossed tie.
  CHECK(strict.counterexample.bids.size() == 1);
  CHECK(strict.counterexample.asks.size() == 1);
  CHECK(strict.counterexample.bids[0].price ==
        strict.counterexample.asks[0].price);

  config.mutation = Mutation::um_reuse_ask;
  const CheckReport reuse = run_check(config);
  REQUIRE_FALSE(reuse.ok);
  CHECK(reuse.invariant.rfind("produce_um.", 0) == 0);

  std::ostringstream out;
  config.mutation = Mutation::mm_strict;
  CHECK(run_check_command(config, out) == kExitInvariantViolation);
  CHECK(out.str().find("INVARIANT VIOLATION") != std::string::npos);
  CHECK(out.str().find("invariant=produce_mm.maximum") != std::string::npos);
}
