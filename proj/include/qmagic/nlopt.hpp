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

// Non-local magic: the linear stabilizer entropy minimized over local
// unitaries U_A (x) U_B.
//
// Each local unitary is parameterized by ZYZ Euler angles,
//   U(phi, theta, lambda) = Rz(phi) Ry(theta) Rz(lambda),
// which covers SU(2) up to a global phase. The search is a multi-start
// Nelder-Mead over the six angles: half the starts come from a Halton
// sequence on the 6-torus, half from a seeded generator, and the best
// start is polished by one restart from its minimizer.

#pragma once

#include <array>
#include <cstdint>

#include "qmagic/qlin.hpp"

namespace qmagic {

struct LocalFrame {
  // (phi_A, theta_A, lambda_A, phi_B, theta_B, lambda_B); phi, lambda in
  // [0, 2pi), theta in [0, pi] once canonicalized.
  std::array<double, 6> angles{};

  Operator2 unitary_a() const;
  Operator2 unitary_b() const;
  Operator4 op() const;

  // Maps arbitrary angles onto the canonical ranges. The resulting operator
  // equals the original one up to a global phase.
  static LocalFrame canonical(const std::array<double, 6>& raw);
};

struct OptimizerConfig {
  int starts = 32;
  double f_tol = 1e-10;
  double x_tol = 1e-8;
  int max_evals = 2000;
  std::uint64_t seed = 1;
};

struct NlResult {
  double m_nl = 0.0;
  LocalFrame frame;
  int starts_used = 0;
  bool converged = true;
  long evaluations = 0;
};

Operator2 local_unitary(double phi, double theta, double lambda);

// Objective of the search: M_lin of (U_A (x) U_B)|psi>.
double frame_m_lin(const LocalFrame& frame, const TwoQubitState& psi);

/// Minimizes M_lin over local frames. Deterministic for a fixed cfg.seed.
/// Stabilizer inputs (M_lin < 1e-12) return 0 without searching.
NlResult nonlocal_magic(const TwoQubitState& psi, const OptimizerConfig& cfg = {});

/// 4 * F_A(psi). Agrees with `nonlocal_magic` for two qubits; the agreement
/// is checked by the test suite rather than assumed here.
double nl_via_antiflatness(const TwoQubitState& psi);

}  // namespace qmagic
