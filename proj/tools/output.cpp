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

#include "output.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "json.hpp"
#include "qmagic/error.hpp"

namespace qmagic::cli {
namespace {

struct CsvField {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double x) const { return format_double(x); }
  std::string operator()(std::int64_t x) const { return std::to_string(x); }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(const std::string& s) const {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }
};

struct JsonField {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(double x) const {
    if (!std::isfinite(x)) return nullptr;
    return x;
  }
  nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (c) out += ',';
    out += t.header[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += std::visit(CsvField{}, row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < t.header.size(); ++c) obj[t.header[c]] = std::visit(JsonField{}, row[c]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render(const Table& t, Format f) { return f == Format::Csv ? to_csv(t) : to_json(t); }

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::IoError, "cannot open '" + tmp.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorKind::IoError, "write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorKind::IoError, "cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

}  // namespace qmagic::cli
