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

#include "qmagic/ensemble.hpp"

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

std::string_view to_string(InitialSet s) {
  switch (s) {
    case InitialSet::Tensor: return "tensor";
    case InitialSet::Entangled: return "entangled";
    case InitialSet::All: return "all";
  }
  return "all";
}

std::optional<InitialSet> parse_initial_set(std::string_view s) {
  if (s == "tensor") return InitialSet::Tensor;
  if (s == "entangled") return InitialSet::Entangled;
  if (s == "all") return InitialSet::All;
  return std::nullopt;
}

FinalMeasures final_measures(const TwoQubitState& chi, const OptimizerConfig& cfg, bool with_nl) {
  const MagicReport r = magic_report(chi);
  FinalMeasures m;
  m.m_lin = r.m_lin;
  m.f_a = r.f_a;
  m.e_lin = r.e_lin;
  if (with_nl) {
    const NlResult nl = nonlocal_magic(chi, cfg);
    m.m_nl = nl.m_nl;
    m.converged = nl.converged;
  }
  return m;
}

std::vector<int> initial_indices(Process process, InitialSet set, std::optional<GroupLabel> label) {
  std::vector<int> out;
  for (const auto& s : stabilizer_atlas()) {
    if (set == InitialSet::Tensor && s.entangled) continue;
    if (set == InitialSet::Entangled && !s.entangled) continue;
    if (label && group_of(process, s.index) != *label) continue;
    out.push_back(s.index);
  }
  return out;
}

EnsembleAverages average_final_measures(std::span<const int> indices, const Evolution& evolve,
                                        const OptimizerConfig& cfg, bool with_nl) {
  EnsembleAverages avg;
  for (int idx : indices) {
    std::optional<TwoQubitState> chi;
    try {
      chi = evolve(stabilizer(idx).state);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroVector) throw;
    }
    if (!chi) {
      ++avg.skipped;
      continue;
    }
    const FinalMeasures m = final_measures(*chi, cfg, with_nl);
    avg.m_lin += m.m_lin;
    avg.m_nl += m.m_nl;
    avg.f_a += m.f_a;
    avg.e_lin += m.e_lin;
    avg.not_converged += m.converged ? 0 : 1;
    ++avg.count;
  }
  if (avg.count > 0) {
    const double n = avg.count;
    avg.m_lin /= n;
    avg.m_nl /= n;
    avg.f_a /= n;
    avg.e_lin /= n;
  }
  return avg;
}

}  // namespace qmagic
