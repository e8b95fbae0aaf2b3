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

// Final-state measures for a scattering map, per state and averaged over a
// set of stabilizer initial states.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmagic/nlopt.hpp"
#include "qmagic/qlin.hpp"
#include "qmagic/stabilizers.hpp"

namespace qmagic {

using Evolution = std::function<TwoQubitState(const TwoQubitState&)>;

struct FinalMeasures {
  double m_lin = 0.0;
  double m_nl = 0.0;
  double f_a = 0.0;
  double e_lin = 0.0;
  bool converged = true;
};

struct EnsembleAverages {
  double m_lin = 0.0;
  double m_nl = 0.0;
  double f_a = 0.0;
  double e_lin = 0.0;
  int count = 0;
  int not_converged = 0;
  int skipped = 0;  // inputs the evolution maps to the zero vector
};

enum class InitialSet { Tensor, Entangled, All };

std::string_view to_string(InitialSet s);
std::optional<InitialSet> parse_initial_set(std::string_view s);

// Skips the non-local search when `with_nl` is false (m_nl left at 0).
FinalMeasures final_measures(const TwoQubitState& chi, const OptimizerConfig& cfg, bool with_nl = true);

/// Stabilizer indices in `set`, optionally restricted to one group label.
std::vector<int> initial_indices(Process process, InitialSet set, std::optional<GroupLabel> label = std::nullopt);

/// Averages of the final-state measures over `indices`, summed in index order.
/// Inputs whose evolution vanishes (zero amplitude) are skipped and counted.
EnsembleAverages average_final_measures(std::span<const int> indices, const Evolution& evolve,
                                        const OptimizerConfig& cfg, bool with_nl = true);

}  // namespace qmagic
