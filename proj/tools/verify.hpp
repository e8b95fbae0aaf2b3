// Copyright 2026 The qmagic Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/nlopt.hpp"

namespace qmagic::cli {

struct Check {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_deviation <= tolerance; }
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::ordered_json info = nlohmann::ordered_json::object();

  bool pass() const;
  const Check* first_failure() const;
  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  std::optional<int> n;  // suite default when unset
  std::uint64_t seed = 1;
  AverageMode mode = AverageMode::Exhaustive;
  std::size_t samples = 5000;
  int points = 25;
  OptimizerConfig optimizer;
  unsigned threads = 1;
};

std::vector<std::string> verify_suites();

/// Throws Error(InvalidArgument) for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt);

}  // namespace qmagic::cli
