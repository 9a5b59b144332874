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

#pragma once

#include <stdexcept>
#include <string>

#include "gchan/channel.hpp"

namespace gchan {

// Malformed channel file: bad JSON, missing keys, dimension mismatch,
// or entries that are neither numbers nor [re, im] pairs.
class ChannelParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Channel file format: {"s": int, "K": [[entry,...],...], "mu": [...]}
// where an entry is either a bare real number or a [re, im] pair. Both
// matrices must be s x s; mu must be Hermitian.
ChannelParams parse_channel(const std::string& json_text);

// parse_channel on the contents of `path`; unreadable files raise
// ChannelParseError too.
ChannelParams load_channel(const std::string& path);

}  // namespace gchan
