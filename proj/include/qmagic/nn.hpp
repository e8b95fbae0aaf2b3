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

// Low-energy S-wave nucleon-nucleon scattering.
//
// The S-matrix acts as e^{2i delta1} on the spin triplet and e^{2i delta0}
// on the singlet. Every complexity measure of the final states depends on
// the phase shifts only through delta_diff = delta1 - delta0.

#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "qmagic/ensemble.hpp"
#include "qmagic/nlopt.hpp"
#include "qmagic/qlin.hpp"
#include "qmagic/stabilizers.hpp"

namespace qmagic::nn {

struct PhaseShiftRecord {
  double p_lab = 0.0;   // MeV
  double delta0 = 0.0;  // rad, spin singlet
  double delta1 = 0.0;  // rad, spin triplet

  double delta_diff() const { return delta1 - delta0; }
};

struct PowerReport {
  double m_lin_bar = 0.0;   // M_lin averaged over all 60 stabilizer states
  double m_lin_bbar = 0.0;  // the rest average over the 36 tensor-product states
  double m_nl_bbar = 0.0;
  double f_a_bbar = 0.0;
  double e_bbar = 0.0;
  int not_converged = 0;
};

struct ClosedForms {
  double m_nl_power = 0.0;
  double m_lin_power = 0.0;
  double e_power = 0.0;
};

struct GroupClosedForms {
  double f_a = 0.0;
  double m_nl = 0.0;
  double m_lin = 0.0;
};

Operator4 s_matrix(double delta0, double delta1);

Evolution evolution(double delta0, double delta1);

PowerReport powers(double delta0, double delta1, const OptimizerConfig& cfg = {});

/// Non-local magic power, total magic power and entanglement power.
ClosedForms closed_forms(double delta_diff);

/// Per-group closed forms for G1, G2, G3; other labels throw InvalidArgument.
GroupClosedForms group_closed_forms(double delta_diff, GroupLabel label);

/// Reads `p_lab_MeV,delta0_<unit>,delta1_<unit>` CSV with unit deg or rad.
/// Throws ParseError (with line number), UnitError or NonMonotonic.
std::vector<PhaseShiftRecord> load_phase_shifts(std::istream& in);
std::vector<PhaseShiftRecord> load_phase_shifts(const std::filesystem::path& path);

}  // namespace qmagic::nn
