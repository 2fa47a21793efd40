// Copyright 2026 The hamsim Authors
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

#include <iosfwd>
#include <optional>
#include <string>

#include "hamsim/json_io.hpp"

namespace hamsim::cli {

using json_io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

struct TSweep {
  double start = 0.1;
  double factor = 0.5;
  int count = 9;
};

/// Parses "start,factor,count".
TSweep parse_sweep(const std::string& text);

json cmd_canonicalize(const json& input);
json cmd_factor(const json& input);
json cmd_synthesize(const json& input, std::optional<double> s);
json cmd_verify(const json& input, const TSweep& sweep, int rounds = 1);
json cmd_separation(int example, int d);
json cmd_twirl_check(const json& input);

/// Entry point behind the `hamsim` executable. Returns the process exit
/// code: 0 success, 1 domain failure, 2 invalid input.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hamsim::cli
