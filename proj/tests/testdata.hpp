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
#include <fstream>
#include <random>
#include <string>

#include "callmatch/core.hpp"
#include "callmatch/types.hpp"

namespace callmatch::testdata {

// 2x2 market where the unique size-two matching cannot clear at one price:
// pairing (100,90) and (80,70) is individually rational only at two
// different trade prices.
inline Instance two_by_two_market() {
  return make_instance({Bid{100, 1}, Bid{80, 2}}, {Ask{90, 1}, Ask{70, 2}});
}

// 8x8 market used as the worked example throughout the tests. Ids ascend
// with price on each side.
inline Instance eight_by_eight_market() {
  return make_instance(
      {Bid{37, 1}, Bid{69, 2}, Bid{82, 3}, Bid{83, 4}, Bid{91, 5}, Bid{112, 6},
       Bid{120, 7}, Bid{125, 8}},
      {Ask{53, 1}, Ask{79, 2}, Ask{85, 3}, Ask{90, 4}, Ask{94, 5}, Ask{98, 6},
       Ask{113, 7}, Ask{121, 8}});
}

// A deliberately unfair (but valid) matching on the 8x8 market: three mid
// orders matched while more competitive ones on both sides sit idle. Trade
// prices at the ask.
inline Matching unfair_three_fill_matching() {
  return {
      Fill{Bid{83, 4}, Ask{79, 2}, 79},
      Fill{Bid{91, 5}, Ask{90, 4}, 90},
      Fill{Bid{120, 7}, Ask{98, 6}, 98},
  };
}

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    dir_ = std::filesystem::temp_directory_path() /
           ("callmatch_test_" + std::to_string(rd()) + "_" +
            std::to_string(rd()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path path(const std::string& name) const {
    return dir_ / name;
  }

 private:
  std::filesystem::path dir_;
};

inline void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace callmatch::testdata
