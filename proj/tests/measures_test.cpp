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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/error.hpp"
#include "qmagic/random.hpp"
#include "qmagic/stabilizers.hpp"

namespace qmagic {
namespace {

constexpr Pauli X = Pauli::X, Y = Pauli::Y, Z = Pauli::Z, I = Pauli::I;

TwoQubitState t_tensor_0() {
  return normalize(kron(oracle::t_state(), Vec2{cplx{1.0}, cplx{}}));
}

TwoQubitState t_tensor_t() { return normalize(kron(oracle::t_state(), oracle::t_state())); }

DensityMatrix2 diag_rho(double a, double b) { return {Operator2::diag(a, b)}; }

void expect_spectrum(const PauliSpectrum& s, const std::vector<std::pair<std::pair<Pauli, Pauli>, double>>& nonzero) {
  std::array<double, 16> want{};
  for (const auto& [pq, v] : nonzero)
    want[4 * static_cast<std::size_t>(pq.first) + static_cast<std::size_t>(pq.second)] = v;
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(s.xi[k], want[k], 1e-15) << "Pauli index " << k;
}

TEST(PauliSpectrum, ComputationalBasisState) {
  expect_spectrum(pauli_spectrum(TwoQubitState::basis(0)),
                  {{{I, I}, 0.25}, {{I, Z}, 0.25}, {{Z, I}, 0.25}, {{Z, Z}, 0.25}});
}

TEST(PauliSpectrum, BellState) {
  expect_spectrum(pauli_spectrum(stabilizer(39).state),
                  {{{I, I}, 0.25}, {{X, X}, 0.25}, {{Y, Y}, 0.25}, {{Z, Z}, 0.25}});
}

TEST(PauliSpectrum, TTensorZero) {
  expect_spectrum(pauli_spectrum(t_tensor_0()), {{{I, I}, 0.25},
                                                 {{X, I}, 0.125},
                                                 {{Y, I}, 0.125},
                                                 {{I, Z}, 0.25},
                                                 {{X, Z}, 0.125},
                                                 {{Y, Z}, 0.125}});
}

TEST(PauliSpectrum, MatchesDenseOracleOnRandomStates) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const TwoQubitState psi = haar_state(rng);
    const PauliSpectrum s = pauli_spectrum(psi);
    const auto ref = oracle::xi(psi);
    for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(s.xi[k], ref[k], 1e-14);
    EXPECT_NEAR(s.sum(), 1.0, 1e-12);
    EXPECT_NEAR(s.at(I, I), 0.25, 1e-12);
    for (double x : s.xi) EXPECT_GE(x, 0.0);
    EXPECT_EQ(s.d, 4);
  }
}

TEST(PauliSpectrum, ExpectationsAreReal) {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    double max_imag = 1.0;
    pauli_expectations(haar_state(rng).amps(), &max_imag);
    EXPECT_LT(max_imag, 1e-14);
  }
}

TEST(MAlpha, StabilizerStatesVanish) {
  for (const auto& s : stabilizer_atlas()) {
    EXPECT_NEAR(m_alpha(pauli_spectrum(s.state), 2.0), 0.0, 1e-10) << s.index;
    EXPECT_NEAR(m_alpha(pauli_spectrum(s.state), 0.5), 0.0, 1e-10) << s.index;
  }
}

TEST(MAlpha, TTensorZero) {
  EXPECT_NEAR(m_alpha(pauli_spectrum(t_tensor_0()), 2.0), -std::log2(0.75), 1e-12);
  EXPECT_NEAR(m_alpha(pauli_spectrum(t_tensor_0()), 2.0), 0.415037, 1e-6);
}

TEST(MAlpha, TTensorT) {
  EXPECT_NEAR(m_alpha(pauli_spectrum(t_tensor_t()), 2.0), -std::log2(9.0 / 16.0), 1e-12);
  EXPECT_NEAR(m_alpha(pauli_spectrum(t_tensor_t()), 2.0), 0.830075, 1e-6);
}

TEST(MAlpha, AlphaOneIsRejected) {
  const PauliSpectrum s = pauli_spectrum(t_tensor_0());
  for (double a : {1.0, 1.0 + 1e-10, 1.0 - 5e-10}) {
    try {
      m_alpha(s, a);
      FAIL() << "expected AlphaOne for alpha " << a;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::AlphaOne);
    }
  }
  EXPECT_NO_THROW(m_alpha(s, 1.0 + 1e-6));
}

TEST(MAlpha, NegativeAlphaIsRejected) {
  try {
    m_alpha(pauli_spectrum(t_tensor_0()), -0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(MAlpha, AlphaZeroCountsSupport) {
  // log2(#nonzero) - log2 4; T (x) 0 has six nonzero entries.
  EXPECT_NEAR(m_alpha(pauli_spectrum(t_tensor_0()), 0.0), std::log2(6.0) - 2.0, 1e-12);
}

TEST(MLin, Examples) {
  EXPECT_NEAR(m_lin(TwoQubitState::basis(0)), 0.0, 1e-15);
  EXPECT_NEAR(m_lin(t_tensor_0()), 0.25, 1e-15);
  EXPECT_NEAR(m_lin(t_tensor_t()), 7.0 / 16.0, 1e-15);
}

TEST(MLin, MatchesOracle) {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const TwoQubitState psi = haar_state(rng);
    EXPECT_NEAR(m_lin(psi), oracle::m_lin(psi), 1e-14);
  }
}

TEST(AntiFlatness, Examples) {
  EXPECT_EQ(anti_flatness(diag_rho(1, 0)), 0.0);
  EXPECT_EQ(anti_flatness(diag_rho(0.5, 0.5)), 0.0);
  EXPECT_NEAR(anti_flatness(diag_rho(0.75, 0.25)), 3.0 / 64.0, 1e-16);
}

TEST(AntiFlatness, NeverNegativeAndMatchesEigenvalueOracle) {
  Rng rng(24);
  for (int t = 0; t < 1000; ++t) {
    const TwoQubitState psi = haar_state(rng);
    const double f = anti_flatness(psi);
    EXPECT_GE(f, 0.0);
    EXPECT_NEAR(f, oracle::anti_flatness(psi), 1e-14);
  }
}

TEST(LinearEntropy, Examples) {
  EXPECT_EQ(linear_entropy(diag_rho(1, 0)), 0.0);
  EXPECT_EQ(linear_entropy(diag_rho(0.5, 0.5)), 0.5);
  EXPECT_NEAR(linear_entropy(diag_rho(0.75, 0.25)), 3.0 / 8.0, 1e-16);
}

TEST(LinearEntropy, MatchesOracleAndRange) {
  Rng rng(25);
  for (int t = 0; t < 500; ++t) {
    const TwoQubitState psi = haar_state(rng);
    const double e = linear_entropy(psi);
    EXPECT_NEAR(e, oracle::linear_entropy(psi), 1e-14);
    EXPECT_GE(e, -1e-15);
    EXPECT_LE(e, 0.5 + 1e-15);
  }
}

TEST(MagicReport, InternalRelations) {
  Rng rng(26);
  for (int t = 0; t < 300; ++t) {
    const MagicReport r = magic_report(haar_state(rng));
    EXPECT_NEAR(r.xi_purity, 1.0 - r.m_lin, 1e-12);
    EXPECT_NEAR(r.m2, -std::log2(1.0 - r.m_lin), 1e-10);
    EXPECT_GT(r.xi_purity, 0.0);
    EXPECT_LE(r.xi_purity, 1.0 + 1e-12);
    EXPECT_GE(r.m_lin, -1e-15);
    EXPECT_LT(r.m_lin, 1.0);
    EXPECT_GE(r.f_a, 0.0);
    EXPECT_LE(r.e_lin, 0.5 + 1e-15);
  }
}

TEST(MagicReport, StabilizerStatesHaveUnitPurity) {
  for (const auto& s : stabilizer_atlas()) {
    const MagicReport r = magic_report(s.state);
    EXPECT_NEAR(r.xi_purity, 1.0, 1e-12) << s.index;
    EXPECT_NEAR(r.m2, 0.0, 1e-10) << s.index;
    EXPECT_NEAR(r.f_a, 0.0, 1e-12) << s.index;
  }
}

TEST(Invariance, AntiFlatnessAndEntropyUnderLocalUnitaries) {
  Rng rng(27);
  std::mt19937_64 g(27);
  for (int t = 0; t < 200; ++t) {
    const TwoQubitState psi = haar_state(rng);
    const TwoQubitState moved = normalize(qmagic::apply(kron(oracle::random_su2(g), oracle::random_su2(g)), psi));
    EXPECT_NEAR(anti_flatness(psi), anti_flatness(moved), 1e-10);
    EXPECT_NEAR(linear_entropy(psi), linear_entropy(moved), 1e-10);
  }
}

TEST(Invariance, MLinUnderLocalCliffordsAndSwap) {
  const std::array<Gate, 4> local{Gate::H1, Gate::H2, Gate::S1, Gate::S2};
  const Operator4 swap = [] {
    Operator4 s;
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return s;
  }();
  Rng rng(28);
  for (int t = 0; t < 200; ++t) {
    const TwoQubitState psi = haar_state(rng);
    const double m = m_lin(psi);
    for (Gate g : local) EXPECT_NEAR(m_lin(normalize(qmagic::apply(gate_matrix(g), psi))), m, 1e-10);
    EXPECT_NEAR(m_lin(normalize(qmagic::apply(swap, psi))), m, 1e-10);
  }
}

TEST(Invariance, ProductAndStabilizerStatesAreFlat) {
  std::mt19937_64 g(29);
  for (int t = 0; t < 200; ++t)
    EXPECT_NEAR(anti_flatness(normalize(kron(oracle::random_vec2(g), oracle::random_vec2(g)))), 0.0, 1e-12);
  for (const auto& s : stabilizer_atlas()) EXPECT_NEAR(anti_flatness(s.state), 0.0, 1e-12) << s.index;
}

TEST(Invariance, XiIsMultiplicativeOnProducts) {
  // Single-qubit xi = 2 * sum_P (<P>^2 / 2)^2.
  auto xi1 = [](const Vec2& v) {
    double s = 0.0;
    for (Pauli p : kPaulis) {
      const Vec2 pv = qmagic::apply(pauli(p), v);
      const double c = (std::conj(v[0]) * pv[0] + std::conj(v[1]) * pv[1]).real();
      s += std::pow(c * c / 2.0, 2);
    }
    return 2.0 * s;
  };
  std::mt19937_64 g(30);
  for (int t = 0; t < 200; ++t) {
    const Vec2 a = oracle::random_vec2(g), b = oracle::random_vec2(g);
    EXPECT_NEAR(magic_report(normalize(kron(a, b))).xi_purity, xi1(a) * xi1(b), 1e-10);
  }
}

}  // namespace
}  // namespace qmagic
