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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/random.hpp"

namespace qmagic {
namespace {

constexpr double kPi = std::numbers::pi;
using G = GroupLabel;

// Singlet/triplet projector construction from the swap operator.
Operator4 s_oracle(double d0, double d1) {
  const cplx e0 = std::polar(1.0, 2 * d0), e1 = std::polar(1.0, 2 * d1);
  Operator4 swap;
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  Operator4 s;
  for (std::size_t k = 0; k < 16; ++k) {
    const cplx id = (k % 5 == 0) ? 1.0 : 0.0;
    s.m[k] = e1 * (id + swap.m[k]) / 2.0 + e0 * (id - swap.m[k]) / 2.0;
  }
  return s;
}

std::vector<nn::PhaseShiftRecord> load(const std::string& text) {
  std::istringstream in(text);
  return nn::load_phase_shifts(in);
}

TEST(SMatrix, DegenerateChannelsGiveAPhase) {
  const Operator4 s = nn::s_matrix(0.4, 0.4);
  Operator4 want = Operator4::identity();
  for (auto& x : want.m) x *= std::polar(1.0, 0.8);
  EXPECT_LE(max_abs_diff(s, want), 1e-15);
}

TEST(SMatrix, QuarterTurnSplitsUpDownEvenly) {
  const Vec4 out = qmagic::apply(nn::s_matrix(0.1, 0.1 + kPi / 4), TwoQubitState::basis(1));
  EXPECT_NEAR(std::norm(out[1]), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(out[2]), 0.5, 1e-15);
  EXPECT_EQ(out[0], cplx{});
  EXPECT_EQ(out[3], cplx{});
}

TEST(SMatrix, MatchesProjectorOracleAndIsUnitary) {
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    const double d0 = rng.uniform(-4.0, 4.0), d1 = rng.uniform(-4.0, 4.0);
    const Operator4 s = nn::s_matrix(d0, d1);
    EXPECT_LE(max_abs_diff(s, s_oracle(d0, d1)), 1e-14);
    EXPECT_LE(max_abs_diff(adjoint(s) * s, Operator4::identity()), 1e-12);
  }
}

TEST(ClosedForms, Examples) {
  const auto z = nn::closed_forms(0.0);
  EXPECT_EQ(z.m_nl_power, 0.0);
  EXPECT_EQ(z.m_lin_power, 0.0);
  EXPECT_EQ(z.e_power, 0.0);
  const auto q = nn::closed_forms(kPi / 4);
  EXPECT_NEAR(q.m_nl_power, 1.0 / 8, 1e-15);
  EXPECT_NEAR(q.m_lin_power, 3.0 / 10, 1e-15);
  EXPECT_NEAR(q.e_power, 1.0 / 6, 1e-15);
  const auto e = nn::closed_forms(kPi / 8);
  EXPECT_NEAR(e.m_nl_power, 11.0 / 96, 1e-15);
  EXPECT_NEAR(e.m_lin_power, 9.0 / 40, 1e-15);
  EXPECT_NEAR(e.e_power, 1.0 / 12, 1e-15);
}

TEST(GroupClosedForms, Examples) {
  for (double d : {0.0, 0.3, kPi / 4, 1.2}) {
    const auto g1 = nn::group_closed_forms(d, G::G1);
    EXPECT_EQ(g1.f_a, 0.0);
    EXPECT_EQ(g1.m_nl, 0.0);
    EXPECT_EQ(g1.m_lin, 0.0);
  }
  const auto g2 = nn::group_closed_forms(kPi / 8, G::G2);
  EXPECT_NEAR(g2.m_lin, 0.25, 1e-15);
  EXPECT_NEAR(g2.m_nl, 0.25, 1e-15);
  EXPECT_NEAR(g2.f_a, 1.0 / 16, 1e-15);
  const auto g3 = nn::group_closed_forms(kPi / 4, G::G3);
  EXPECT_NEAR(g3.m_nl, 3.0 / 16, 1e-15);
  EXPECT_NEAR(g3.m_lin, 9.0 / 16, 1e-15);
  EXPECT_NEAR(g3.f_a, 3.0 / 64, 1e-15);
  EXPECT_EQ(oracle::kind_of([] { nn::group_closed_forms(0.1, G::G4); }), ErrorKind::InvalidArgument);
}

TEST(GroupClosedForms, AgreeWithFinalStatesOfMembers) {
  for (int k = 0; k <= 20; ++k) {
    const double d = kPi / 2 * k / 20;
    const Evolution ev = nn::evolution(0.0, d);
    for (G g : {G::G1, G::G2, G::G3}) {
      const auto cf = nn::group_closed_forms(d, g);
      for (int idx : group_members(Process::NN, g)) {
        const TwoQubitState chi = ev(stabilizer(idx).state);
        EXPECT_NEAR(oracle::m_lin(chi), cf.m_lin, 1e-10) << idx;
        if (!stabilizer(idx).entangled) EXPECT_NEAR(oracle::anti_flatness(chi), cf.f_a, 1e-10) << idx;
      }
    }
  }
}

TEST(GroupClosedForms, EntangledGroupThreeHasMoreNonlocalMagic) {
  const double d = kPi / 8;
  const Evolution ev = nn::evolution(0.0, d);
  const double tensor = nn::group_closed_forms(d, G::G3).m_nl;
  int entangled = 0;
  for (int idx : group_members(Process::NN, G::G3)) {
    if (!stabilizer(idx).entangled) continue;
    ++entangled;
    EXPECT_GT(nl_via_antiflatness(ev(stabilizer(idx).state)), tensor + 1e-3) << idx;
  }
  EXPECT_EQ(entangled, 8);
}

TEST(Powers, VanishAtZeroAndHalfPi) {
  for (double d : {0.0, kPi / 2}) {
    const nn::PowerReport r = nn::powers(0.2, 0.2 + d);
    EXPECT_NEAR(r.m_lin_bar, 0.0, 1e-12);
    EXPECT_NEAR(r.m_lin_bbar, 0.0, 1e-12);
    EXPECT_NEAR(r.m_nl_bbar, 0.0, 1e-9);
    EXPECT_NEAR(r.f_a_bbar, 0.0, 1e-12);
    EXPECT_NEAR(r.e_bbar, 0.0, 1e-12);
  }
}

TEST(Powers, QuarterTurn) {
  const nn::PowerReport r = nn::powers(0.0, kPi / 4);
  EXPECT_NEAR(r.m_lin_bar, 3.0 / 10, 1e-10);
  EXPECT_NEAR(r.m_nl_bbar, 1.0 / 8, 1e-6);
  EXPECT_NEAR(r.e_bbar, 1.0 / 6, 1e-10);
  EXPECT_NEAR(r.m_lin_bbar, 3.0 / 8, 1e-10);
  EXPECT_EQ(r.not_converged, 0);
}

TEST(Powers, BruteForceMatchesClosedForms) {
  for (int k = 0; k <= 10; ++k) {
    const double d = kPi / 2 * k / 10;
    const nn::PowerReport r = nn::powers(0.0, d);
    const auto cf = nn::closed_forms(d);
    EXPECT_NEAR(r.m_lin_bar, cf.m_lin_power, 1e-10) << d;
    EXPECT_NEAR(r.e_bbar, cf.e_power, 1e-10) << d;
    EXPECT_NEAR(r.m_nl_bbar, cf.m_nl_power, 1e-6) << d;
    EXPECT_NEAR(4 * r.f_a_bbar, r.m_nl_bbar, 1e-6) << d;
    // Tensor-only average from the per-group forms: 6 G1, 6 G2, 24 G3.
    const double bbar =
        (6 * nn::group_closed_forms(d, G::G2).m_lin + 24 * nn::group_closed_forms(d, G::G3).m_lin) / 36;
    EXPECT_NEAR(r.m_lin_bbar, bbar, 1e-10) << d;
  }
}

TEST(Powers, DependOnlyOnThePhaseDifference) {
  const nn::PowerReport a = nn::powers(0.0, 0.6);
  const nn::PowerReport b = nn::powers(-1.1, -0.5);
  EXPECT_NEAR(a.m_lin_bar, b.m_lin_bar, 1e-12);
  EXPECT_NEAR(a.e_bbar, b.e_bbar, 1e-12);
  EXPECT_NEAR(a.m_nl_bbar, b.m_nl_bbar, 1e-7);
}

TEST(LoadPhaseShifts, DegreesRow) {
  const auto rows = load("p_lab_MeV,delta0_deg,delta1_deg\n0.0,0.0,0.0\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].delta_diff(), 0.0);
  const auto deg = load("p_lab_MeV,delta0_deg,delta1_deg\n1.0,45.0,90.0\n");
  EXPECT_NEAR(deg[0].delta0, kPi / 4, 1e-15);
  EXPECT_NEAR(deg[0].delta1, kPi / 2, 1e-15);
}

TEST(LoadPhaseShifts, RadiansAndComments) {
  const auto rows = load("# comment\n\np_lab_MeV,delta0_rad,delta1_rad\n# more\n1,0.5,0.25\n2,0.1,0.3\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].delta0, 0.5);
  EXPECT_EQ(rows[1].p_lab, 2.0);
  EXPECT_NEAR(rows[1].delta_diff(), 0.2, 1e-15);
}

TEST(LoadPhaseShifts, NonNumericFieldNamesTheLine) {
  try {
    load("p_lab_MeV,delta0_deg,delta1_deg\n1,2,3\n2,abc,3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LoadPhaseShifts, Errors) {
  EXPECT_EQ(oracle::kind_of([] { load("p_lab_MeV,delta0_grad,delta1_deg\n1,2,3\n"); }), ErrorKind::UnitError);
  EXPECT_EQ(oracle::kind_of([] { load("p_lab_MeV,delta0_deg,delta1_deg\n2,0,0\n1,0,0\n"); }),
            ErrorKind::NonMonotonic);
  EXPECT_EQ(oracle::kind_of([] { load("p_lab_MeV,delta0_deg,delta1_deg\n2,0,0\n2,0,0\n"); }),
            ErrorKind::NonMonotonic);
  EXPECT_EQ(oracle::kind_of([] { load("p_lab_MeV,delta0_deg,delta1_deg\n-1,0,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(oracle::kind_of([] { load("p_lab_MeV,delta0_deg,delta1_deg\n1,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(oracle::kind_of([] { load("energy,delta0_deg,delta1_deg\n1,0,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(oracle::kind_of([] { load(""); }), ErrorKind::ParseError);
  EXPECT_EQ(oracle::kind_of([] { nn::load_phase_shifts(std::filesystem::path("/nonexistent/x.csv")); }),
            ErrorKind::IoError);
}

TEST(LoadPhaseShifts, FixtureFile) {
  const auto rows = nn::load_phase_shifts(std::filesystem::path(QMAGIC_TEST_DATA "/phase_shifts_fixture.csv"));
  ASSERT_EQ(rows.size(), 5u);
  const std::array<double, 5> diffs{0, kPi / 8, kPi / 4, kPi / 2, kPi / 4};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i].delta_diff(), diffs[i], 1e-15);
    const Operator4 s = nn::s_matrix(rows[i].delta0, rows[i].delta1);
    EXPECT_LE(max_abs_diff(adjoint(s) * s, Operator4::identity()), 1e-12);
  }
}

}  // namespace
}  // namespace qmagic
