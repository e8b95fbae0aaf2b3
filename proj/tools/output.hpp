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
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace qmagic::cli {

// monostate is an empty field (null in JSON).
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// %.17g, so every double round-trips.
std::string format_double(double x);

std::string to_csv(const Table& t);

/// Array of objects keyed by the header.
std::string to_json(const Table& t);

std::string render(const Table& t, Format f);

/// Writes to a sibling temporary file, then renames over `path`. Nothing is
/// left behind on failure. Throws Error(IoError).
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qmagic::cli
