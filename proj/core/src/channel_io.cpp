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

#include "gchan/channel_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gchan/matcore.hpp"

namespace gchan {

namespace {

using nlohmann::json;

// Entry: bare number or [re, im].
Complex parse_entry(const json& cell, const char* name) {
  if (cell.is_number()) return Complex(cell.get<double>(), 0.0);
  if (cell.is_array() && cell.size() == 2 && cell[0].is_number() &&
      cell[1].is_number()) {
    return Complex(cell[0].get<double>(), cell[1].get<double>());
  }
  throw ChannelParseError(std::string("channel file: entry of \"") + name +
                          "\" must be a number or a [re, im] pair");
}

ComplexMatrix parse_matrix(const json& rows, Eigen::Index s,
                           const char* name) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != s) {
    std::ostringstream msg;
    msg << "channel file: \"" << name << "\" must be an array of " << s
        << " rows";
    throw ChannelParseError(msg.str());
  }
  ComplexMatrix M(s, s);
  for (Eigen::Index i = 0; i < s; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != s) {
      std::ostringstream msg;
      msg << "channel file: row " << i << " of \"" << name << "\" must have "
          << s << " entries";
      throw ChannelParseError(msg.str());
    }
    for (Eigen::Index j = 0; j < s; ++j) {
      M(i, j) = parse_entry(row[static_cast<std::size_t>(j)], name);
    }
  }
  return M;
}

}  // namespace

ChannelParams parse_channel(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ChannelParseError(std::string("channel file: invalid JSON: ") +
                            err.what());
  }
  if (!doc.is_object()) {
    throw ChannelParseError("channel file: top level must be an object");
  }
  for (const char* key : {"s", "K", "mu"}) {
    if (!doc.contains(key)) {
      throw ChannelParseError(std::string("channel file: missing key \"") +
                              key + "\"");
    }
  }
  if (!doc["s"].is_number_integer() || doc["s"].get<std::int64_t>() < 1) {
    throw ChannelParseError("channel file: \"s\" must be a positive integer");
  }
  ChannelParams params;
  params.s = doc["s"].get<Eigen::Index>();
  params.K = parse_matrix(doc["K"], params.s, "K");
  params.mu = parse_matrix(doc["mu"], params.s, "mu");
  if (!is_hermitian(params.mu)) {
    throw ChannelParseError("channel file: \"mu\" must be Hermitian");
  }
  return params;
}

ChannelParams load_channel(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ChannelParseError("channel file: cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_channel(buffer.str());
}

}  // namespace gchan
