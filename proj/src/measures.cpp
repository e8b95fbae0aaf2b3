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

#include "qmagic/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qmagic/error.hpp"

namespace qmagic {
namespace {

constexpr double kImagTol = 1e-10;

// A single-qubit Pauli has one nonzero per row: row r maps to column
// col[r] with value val[r].
struct SparsePauli {
  std::array<int, 2> col;
  std::array<cplx, 2> val;
};

constexpr std::array<SparsePauli, 4> kSparse{{
    {{1, 0}, {cplx{1, 0}, cplx{1, 0}}},   // X
    {{1, 0}, {cplx{0, -1}, cplx{0, 1}}},  // Y
    {{0, 1}, {cplx{1, 0}, cplx{-1, 0}}},  // Z
    {{0, 1}, {cplx{1, 0}, cplx{1, 0}}},   // I
}};

}  // namespace

double PauliSpectrum::sum() const {
  double s = 0.0;
  for (double x : xi) s += x;
  return s;
}

std::array<double, 16> pauli_expectations(const Vec4& v, double* max_imag) {
  std::array<double, 16> c{};
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& pa = kSparse[i];
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& pb = kSparse[j];
      cplx acc{};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const int col = 2 * pa.col[a] + pb.col[b];
          acc += std::conj(v[2 * a + b]) * pa.val[a] * pb.val[b] * v[col];
        }
      c[4 * i + j] = acc.real();
      worst = std::max(worst, std::abs(acc.imag()));
    }
  }
  if (max_imag) *max_imag = worst;
  return c;
}

PauliSpectrum pauli_spectrum(const TwoQubitState& psi) {
  double max_imag = 0.0;
  const auto c = pauli_expectations(psi.amps(), &max_imag);
  if (max_imag >= kImagTol)
    throw Error(ErrorKind::NonHermitianExpectation,
                "Pauli expectation has imaginary part " + std::to_string(max_imag));
  PauliSpectrum s;
  for (std::size_t k = 0; k < 16; ++k) s.xi[k] = c[k] * c[k] / kDim;
  return s;
}

double m_alpha(const PauliSpectrum& spectrum, double alpha) {
  if (std::abs(alpha - 1.0) < 1e-9) throw Error(ErrorKind::AlphaOne, "alpha = 1 is not supported");
  if (!(alpha >= 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
  double s = 0.0;
  for (double x : spectrum.xi)
    if (x > 0.0) s += std::pow(x, alpha);
  return std::log2(s) / (1.0 - alpha) - std::log2(static_cast<double>(spectrum.d));
}

double m_lin(const PauliSpectrum& spectrum) {
  double s = 0.0;
  for (double x : spectrum.xi) s += x * x;
  return 1.0 - spectrum.d * s;
}

double stabilizer_purity(const Vec4& v) {
  // xi = d * sum (c^2 / d)^2 = sum c^4 / d.
  const auto c = pauli_expectations(v);
  double s = 0.0;
  for (double x : c) {
    const double x2 = x * x;
    s += x2 * x2;
  }
  return s / kDim;
}

double anti_flatness(const DensityMatrix2& rho) {
  const double p2 = rho.purity();
  const double f = rho.cube_trace() - p2 * p2;
  return (f < 0.0 && f >= -kExactTol) ? 0.0 : f;
}

double linear_entropy(const DensityMatrix2& rho) { return 1.0 - rho.purity(); }

MagicReport magic_report(const TwoQubitState& psi) {
  const PauliSpectrum spectrum = pauli_spectrum(psi);
  const DensityMatrix2 rho = partial_trace_B(psi);
  MagicReport r;
  r.m_lin = m_lin(spectrum);
  r.xi_purity = 1.0 - r.m_lin;
  r.m2 = -std::log2(r.xi_purity);
  r.f_a = anti_flatness(rho);
  r.e_lin = linear_entropy(rho);
  return r;
}

}  // namespace qmagic
