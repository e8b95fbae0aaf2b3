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

// High-energy (m_e -> 0) Moller scattering e- e- -> e- e- at tree level.
//
// The final spin state is the normalized image of the initial helicity
// state under the amplitude matrix; overall couplings and signs drop out on
// normalization. Helicity basis ordering is {RR, RL, LR, LL}, matching
// {|00>, |01>, |10>, |11>}.

#pragma once

#include <array>
#include <vector>

#include "qmagic/ensemble.hpp"
#include "qmagic/qlin.hpp"
#include "qmagic/stabilizers.hpp"

namespace qmagic::moller {

inline constexpr double kDefaultGuard = 1e-6;

/// CM scattering angle strictly inside (0, pi): it must lie in
/// [guard, pi - guard], otherwise Error(InvalidAngle).
class ScatteringAngle {
 public:
  explicit ScatteringAngle(double theta, double guard = kDefaultGuard);
  double value() const noexcept { return theta_; }

 private:
  double theta_;
};

using FourVector = std::array<double, 4>;  // (E, px, py, pz)

double minkowski_square(const FourVector& p);

struct Kinematics {
  double energy = 0.0;  // total CM energy E = sqrt(s)
  double m_e = 0.0;
  double p_mag = 0.0;   // |p_e| per particle
  FourVector p1{}, p2{}, p3{}, p4{};
  double s = 0.0, t = 0.0, u = 0.0;

  // Invariants are computed from the four-vectors, so s + t + u = 4 m_e^2.
  static Kinematics center_of_momentum(double energy, double m_e, ScatteringAngle theta);
};

struct HelicityAmplitudes {
  double rr_rr = 0.0;  // = LL:LL
  double rl_rl = 0.0;  // = LR:LR
  double rl_lr = 0.0;  // = LR:RL
};

/// Non-vanishing massless helicity amplitudes in Mandelstam form. Throws
/// ForwardBackwardSingularity when |t| or |u| is below 1e-12 * s.
HelicityAmplitudes helicity_amplitudes(double s, double t, double u);

/// Amplitude matrix in the helicity basis with the overall factor dropped.
Operator4 amplitude_matrix(ScatteringAngle theta);

/// Assembles the matrix from Mandelstam-form amplitudes.
Operator4 amplitude_matrix(const HelicityAmplitudes& a);

/// Normalized A(theta)|psi>; propagates Error(ZeroVector).
TwoQubitState final_state(ScatteringAngle theta, const TwoQubitState& psi);

Evolution evolution(ScatteringAngle theta);

/// Closed-form total linear magic of the final state per group. G5a, G5b
/// and G5ent share the group-5 expression.
double group_m_lin(ScatteringAngle theta, GroupLabel label);

/// Closed-form anti-flatness for G1..G4, G5a, G5b (tensor-product inputs).
double group_anti_flatness(ScatteringAngle theta, GroupLabel label);

struct AuditRow {
  int index = 0;
  GroupLabel listed = GroupLabel::Unassigned;
  GroupLabel computed = GroupLabel::Unassigned;
};

/// Assigns every stabilizer state to the group whose closed-form M_lin (and,
/// for tensor group-5 states, anti-flatness) its final states reproduce.
std::vector<AuditRow> audit_groups();

}  // namespace qmagic::moller
