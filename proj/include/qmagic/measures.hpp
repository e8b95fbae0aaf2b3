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

// Magic and entanglement measures of a two-qubit pure state.

#pragma once

#include <array>
#include <cstddef>

#include "qmagic/qlin.hpp"

namespace qmagic {

inline constexpr int kDim = 4;

/// Squared Pauli expectations divided by the dimension, one per Pauli string
/// sigma_i (x) sigma_j with i, j in {X, Y, Z, I}; index 4 * i + j.
struct PauliSpectrum {
  std::array<double, 16> xi{};
  int d = kDim;

  double at(Pauli a, Pauli b) const {
    return xi[4 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b)];
  }
  double sum() const;
};

struct MagicReport {
  double m_lin = 0.0;
  double m2 = 0.0;
  double xi_purity = 1.0;
  double f_a = 0.0;
  double e_lin = 0.0;
};

// <v|sigma_i (x) sigma_j|v> for all 16 strings, index 4 * i + j. Real parts
// only; `max_imag` receives the largest imaginary part seen.
std::array<double, 16> pauli_expectations(const Vec4& v, double* max_imag = nullptr);

/// Throws Error(NonHermitianExpectation) if any expectation has an imaginary
/// part of 1e-10 or more, which only happens for a corrupted state.
PauliSpectrum pauli_spectrum(const TwoQubitState& psi);

/// Stabilizer Renyi entropy of order alpha (alpha >= 0, alpha != 1).
double m_alpha(const PauliSpectrum& spectrum, double alpha);

/// 1 - d * sum(xi^2).
double m_lin(const PauliSpectrum& spectrum);

// d * sum(xi^2) computed straight from amplitudes; `v` must be unit norm.
// This is the hot path of the non-local magic search.
double stabilizer_purity(const Vec4& v);

/// Tr(rho^3) - (Tr rho^2)^2, with round-off in [-1e-12, 0) clamped to 0.
double anti_flatness(const DensityMatrix2& rho);

/// 1 - Tr(rho^2).
double linear_entropy(const DensityMatrix2& rho);

MagicReport magic_report(const TwoQubitState& psi);

// Convenience wrappers on states.
inline double m_lin(const TwoQubitState& psi) { return m_lin(pauli_spectrum(psi)); }
inline double anti_flatness(const TwoQubitState& psi) { return anti_flatness(partial_trace_B(psi)); }
inline double linear_entropy(const TwoQubitState& psi) { return linear_entropy(partial_trace_B(psi)); }

}  // namespace qmagic
