// Copyright the gchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>

#include "gchan/channel.hpp"
#include "gchan/channel_io.hpp"

using namespace gchan;

TEST_SUITE("channel_io") {

TEST_CASE("parse_channel: single-mode attenuator with bare numbers") {
  const ChannelParams params = parse_channel(
      R"({"s": 1, "K": [[0.8]], "mu": [[0.18]]})");
  CHECK(params.s == 1);
  CHECK(params.K(0, 0) == Complex(0.8, 0.0));
  CHECK(params.mu(0, 0) == Complex(0.18, 0.0));
  CHECK(cp_check(params).is_cp);
}

TEST_CASE("parse_channel: complex entries as [re, im] pairs") {
  const ChannelParams params = parse_channel(R"({
    "s": 2,
    "K": [[[0.0, 0.8], 0.1], [0.0, [1.0, 0.0]]],
    "mu": [[0.5, [0.1, 0.2]], [[0.1, -0.2], 0.7]]
  })");
  CHECK(params.s == 2);
  CHECK(params.K(0, 0) == Complex(0.0, 0.8));
  CHECK(params.K(0, 1) == Complex(0.1, 0.0));
  CHECK(params.K(1, 0) == Complex(0.0, 0.0));
  CHECK(params.K(1, 1) == Complex(1.0, 0.0));
  CHECK(params.mu(0, 1) == Complex(0.1, 0.2));
  CHECK(params.mu(1, 0) == Complex(0.1, -0.2));
}

TEST_CASE("parse_channel: malformed inputs are rejected with context") {
  // Broken JSON.
  CHECK_THROWS_AS(parse_channel("{\"s\": 1,"), ChannelParseError);
  // Wrong top-level type.
  CHECK_THROWS_AS(parse_channel("[1, 2, 3]"), ChannelParseError);
  // Missing keys.
  CHECK_THROWS_AS(parse_channel(R"({"s": 1, "K": [[1.0]]})"),
                  ChannelParseError);
  CHECK_THROWS_AS(parse_channel(R"({"K": [[1.0]], "mu": [[0.0]]})"),
                  ChannelParseError);
  // Bad mode count.
  CHECK_THROWS_AS(parse_channel(R"({"s": 0, "K": [], "mu": []})"),
                  ChannelParseError);
  CHECK_THROWS_AS(parse_channel(R"({"s": 1.5, "K": [[1.0]], "mu": [[0.0]]})"),
                  ChannelParseError);
  // Row/column counts that disagree with s.
  CHECK_THROWS_AS(parse_channel(R"({"s": 2, "K": [[1.0]], "mu": [[0.0]]})"),
                  ChannelParseError);
  CHECK_THROWS_AS(
      parse_channel(R"({"s": 1, "K": [[1.0, 2.0]], "mu": [[0.0]]})"),
      ChannelParseError);
  // Entries that are neither numbers nor [re, im].
  CHECK_THROWS_AS(
      parse_channel(R"({"s": 1, "K": [["x"]], "mu": [[0.0]]})"),
      ChannelParseError);
  CHECK_THROWS_AS(
      parse_channel(R"({"s": 1, "K": [[[1.0]]], "mu": [[0.0]]})"),
      ChannelParseError);
  // Non-Hermitian mu.
  CHECK_THROWS_AS(
      parse_channel(
          R"({"s": 2, "K": [[1.0, 0.0], [0.0, 1.0]],
              "mu": [[0.5, 0.3], [0.1, 0.5]]})"),
      ChannelParseError);
}

TEST_CASE("parse ChannelParseError messages name the offending key") {
  try {
    parse_channel(R"({"s": 2, "K": [[1.0]], "mu": [[0.0]]})");
    FAIL("expected ChannelParseError");
  } catch (const ChannelParseError& err) {
    CHECK(std::string(err.what()).find("\"K\"") != std::string::npos);
  }
}

TEST_CASE("load_channel: file round trip and missing-file error") {
  const std::string path = "gchan_io_test_channel.json";
  {
    std::ofstream out(path);
    out << R"({"s": 1, "K": [[1.4142135623730951]], "mu": [[0.5]]})";
  }
  const ChannelParams params = load_channel(path);
  CHECK(params.s == 1);
  CHECK(params.K(0, 0).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(cp_check(params).is_cp);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_channel("definitely/not/a/file.json"),
                  ChannelParseError);
}

}  // TEST_SUITE
