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

#include "qmagic/nn.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"

namespace qmagic::nn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Multiplier to radians for a `delta<k>_<unit>` header field.
double angle_scale(std::string_view field, std::string_view stem) {
  if (field.substr(0, stem.size()) != stem)
    throw Error(ErrorKind::ParseError, "line 1: expected column '" + std::string(stem) + "<unit>', got '" +
                                           std::string(field) + "'");
  const std::string_view unit = field.substr(stem.size());
  if (unit == "deg") return std::numbers::pi / 180.0;
  if (unit == "rad") return 1.0;
  throw Error(ErrorKind::UnitError, "line 1: unknown angle unit '" + std::string(unit) + "'");
}

double parse_number(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v))
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": not a number: '" + std::string(field) + "'");
  return v;
}

}  // namespace

Operator4 s_matrix(double delta0, double delta1) {
  const cplx e1 = std::polar(1.0, 2.0 * delta1);
  const cplx e0 = std::polar(1.0, 2.0 * delta0);
  const cplx sum = 0.5 * (e1 + e0);
  const cplx diff = 0.5 * (e1 - e0);
  Operator4 s;
  s(0, 0) = e1;
  s(1, 1) = sum;
  s(1, 2) = diff;
  s(2, 1) = diff;
  s(2, 2) = sum;
  s(3, 3) = e1;
  return s;
}

Evolution evolution(double delta0, double delta1) {
  const Operator4 s = s_matrix(delta0, delta1);
  return [s](const TwoQubitState& psi) { return normalize(apply(s, psi)); };
}

PowerReport powers(double delta0, double delta1, const OptimizerConfig& cfg) {
  const Evolution evolve = evolution(delta0, delta1);
  const auto all = initial_indices(Process::NN, InitialSet::All);
  const auto tensor = initial_indices(Process::NN, InitialSet::Tensor);
  const EnsembleAverages full = average_final_measures(all, evolve, cfg, /*with_nl=*/false);
  const EnsembleAverages prod = average_final_measures(tensor, evolve, cfg, /*with_nl=*/true);
  PowerReport r;
  r.m_lin_bar = full.m_lin;
  r.m_lin_bbar = prod.m_lin;
  r.m_nl_bbar = prod.m_nl;
  r.f_a_bbar = prod.f_a;
  r.e_bbar = prod.e_lin;
  r.not_converged = prod.not_converged;
  return r;
}

ClosedForms closed_forms(double delta_diff) {
  const double s2 = std::pow(std::sin(2.0 * delta_diff), 2);
  const double c4 = std::cos(4.0 * delta_diff);
  return {(11.0 + 5.0 * c4) * s2 / 48.0, 3.0 * (3.0 + c4) * s2 / 20.0, s2 / 6.0};
}

GroupClosedForms group_closed_forms(double delta_diff, GroupLabel label) {
  switch (label) {
    case GroupLabel::G1:
      return {0.0, 0.0, 0.0};
    case GroupLabel::G2: {
      const double m = std::pow(std::sin(4.0 * delta_diff), 2) / 4.0;
      return {m / 4.0, m, m};
    }
    case GroupLabel::G3: {
      const double nl = (7.0 + std::cos(4.0 * delta_diff)) * std::pow(std::sin(2.0 * delta_diff), 2) / 32.0;
      return {nl / 4.0, nl, 3.0 * nl};
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "NN groups are G1, G2, G3");
  }
}

std::vector<PhaseShiftRecord> load_phase_shifts(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  double scale0 = 0.0;
  double scale1 = 0.0;
  bool have_header = false;
  std::vector<PhaseShiftRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = split_csv(view);
    if (!have_header) {
      if (fields.size() != 3 || fields[0] != "p_lab_MeV")
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                               ": header must be p_lab_MeV,delta0_<deg|rad>,delta1_<deg|rad>");
      scale0 = angle_scale(fields[1], "delta0_");
      scale1 = angle_scale(fields[2], "delta1_");
      have_header = true;
      continue;
    }
    if (fields.size() != 3)
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected 3 fields, got " + std::to_string(fields.size()));
    PhaseShiftRecord r;
    r.p_lab = parse_number(fields[0], line_no);
    r.delta0 = parse_number(fields[1], line_no) * scale0;
    r.delta1 = parse_number(fields[2], line_no) * scale1;
    if (r.p_lab < 0.0)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": negative p_lab");
    if (!out.empty() && !(r.p_lab > out.back().p_lab))
      throw Error(ErrorKind::NonMonotonic,
                  "line " + std::to_string(line_no) + ": p_lab must be strictly increasing");
    out.push_back(r);
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing header");
  return out;
}

std::vector<PhaseShiftRecord> load_phase_shifts(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return load_phase_shifts(in);
}

}  // namespace qmagic::nn
