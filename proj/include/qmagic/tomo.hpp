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

// Single-qubit reconstruction of rho_A from spin expectation values, and a
// finite-shot anti-flatness estimator built on it.
//
// Shot model: independent batches of `shots` projective measurements along
// x, y and z on qubit A. Each batch is a binomial draw with the exact
// marginal probability (1 + <sigma>)/2. A Bloch vector longer than 1 from
// shot noise is scaled back onto the unit sphere before reconstruction.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qmagic/qlin.hpp"

namespace qmagic::tomo {

inline constexpr int kBootstrapResamples = 200;

struct BlochMeasurement {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  std::optional<std::int64_t> shots_per_axis;  // nullopt: exact expectations

  double norm() const;
};

/// rho = (I + sx X + sy Y + sz Z) / 2. Exact mode throws UnphysicalBloch if
/// the norm exceeds 1 + 1e-12; shot mode projects onto the unit ball.
DensityMatrix2 rho_from_bloch(const BlochMeasurement& m);

/// (<X>, <Y>, <Z>) of rho.
std::array<double, 3> bloch_vector(const DensityMatrix2& rho);

struct Estimate {
  double estimate = 0.0;
  double std_err = 0.0;
  std::array<double, 3> bloch{};
  bool projected = false;  // shot-noise Bloch vector was rescaled to norm 1
};

/// Anti-flatness of qubit A estimated from simulated spin measurements.
/// `shots` nullopt gives the exact value with std_err 0. Deterministic for
/// fixed (shots, seed).
Estimate estimate_antiflatness(const TwoQubitState& psi, std::optional<std::int64_t> shots, std::uint64_t seed,
                               int resamples = kBootstrapResamples);

}  // namespace qmagic::tomo
