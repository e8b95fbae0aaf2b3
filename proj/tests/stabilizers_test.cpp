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

#include "qmagic/stabilizers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "oracles.hpp"
#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/moller.hpp"
#include "qmagic/nn.hpp"

namespace qmagic {
namespace {

using G = GroupLabel;

const Vec2 kUp{cplx{1.0}, cplx{}};
const Vec2 kDown{cplx{}, cplx{1.0}};
const Vec2 kPlus{cplx{1.0 / std::numbers::sqrt2}, cplx{1.0 / std::numbers::sqrt2}};

TEST(Atlas, SixtyStatesInOrder) {
  const auto atlas = stabilizer_atlas();
  ASSERT_EQ(atlas.size(), 60u);
  for (std::size_t i = 0; i < atlas.size(); ++i) EXPECT_EQ(atlas[i].index, static_cast<int>(i) + 1);
}

TEST(Atlas, State33IsUpUp) { EXPECT_EQ(stabilizer(33).state, TwoQubitState::basis(0)); }

TEST(Atlas, State1IsUniform) {
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(stabilizer(1).state[k] - cplx{0.5}), 0.0, 1e-15);
  for (const auto& a : stabilizer(1).raw) EXPECT_EQ(a, cplx{1.0});
}

TEST(Atlas, State39IsBell) {
  const TwoQubitState& s = stabilizer(39).state;
  EXPECT_NEAR(s[0].real(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(s[3].real(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_EQ(s[1], cplx{});
  EXPECT_EQ(s[2], cplx{});
  EXPECT_TRUE(stabilizer(39).entangled);
}

TEST(Atlas, IndexOutOfRange) {
  for (int bad : {0, -1, 61, 1000}) {
    try {
      stabilizer(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
  }
}

TEST(Atlas, RawAmplitudesAreFromTheAllowedAlphabet) {
  for (const auto& s : stabilizer_atlas())
    for (const auto& a : s.raw) {
      const bool ok = a == cplx{0} || a == cplx{1} || a == cplx{-1} || a == cplx{0, 1} || a == cplx{0, -1};
      EXPECT_TRUE(ok) << s.index;
    }
}

TEST(Atlas, EveryStateHasZeroMagic) {
  for (const auto& s : stabilizer_atlas()) {
    EXPECT_LE(std::abs(oracle::m_lin(s.state)), 1e-12) << s.index;
    EXPECT_NEAR(magic_report(s.state).xi_purity, 1.0, 1e-12) << s.index;
  }
}

TEST(Atlas, TensorEntangledSplit) {
  int tensor = 0;
  for (const auto& s : stabilizer_atlas()) {
    EXPECT_EQ(s.entangled, s.index > kNumTensorStabilizers) << s.index;
    const double e = oracle::linear_entropy(s.state);
    if (s.entangled)
      EXPECT_NEAR(e, 0.5, 1e-12) << s.index;
    else
      EXPECT_NEAR(e, 0.0, 1e-12) << s.index;
    tensor += s.entangled ? 0 : 1;
  }
  EXPECT_EQ(tensor, 36);
}

TEST(Atlas, StatesAreDistinctRays) {
  const auto atlas = stabilizer_atlas();
  for (std::size_t i = 0; i < atlas.size(); ++i)
    for (std::size_t j = i + 1; j < atlas.size(); ++j)
      EXPECT_LT(std::abs(inner(atlas[i].state.amps(), atlas[j].state.amps())), 1.0 - 1e-6)
          << atlas[i].index << " vs " << atlas[j].index;
}

TEST(Groups, Examples) {
  EXPECT_EQ(group_of(Process::NN, 33), G::G1);
  EXPECT_EQ(group_of(Process::Moller, 34), G::G4);
  EXPECT_EQ(group_of(Process::Moller, 9), G::G5b);
  EXPECT_EQ(group_of(Process::Moller, 43), G::Unassigned);
}

TEST(Groups, NnCardinalities) {
  std::map<G, std::array<int, 2>> count;
  for (const auto& s : stabilizer_atlas()) ++count[group_of(Process::NN, s.index)][s.entangled ? 1 : 0];
  EXPECT_EQ(count.size(), 3u);
  EXPECT_EQ(count[G::G1], (std::array<int, 2>{6, 10}));
  EXPECT_EQ(count[G::G2], (std::array<int, 2>{6, 6}));
  EXPECT_EQ(count[G::G3], (std::array<int, 2>{24, 8}));
}

TEST(Groups, MollerCardinalities) {
  std::map<G, std::array<int, 2>> count;
  for (const auto& s : stabilizer_atlas()) ++count[group_of(Process::Moller, s.index)][s.entangled ? 1 : 0];
  EXPECT_EQ(count[G::G1], (std::array<int, 2>{2, 6}));
  EXPECT_EQ(count[G::G2], (std::array<int, 2>{4, 4}));
  EXPECT_EQ(count[G::G3], (std::array<int, 2>{4, 4}));
  EXPECT_EQ(count[G::G4], (std::array<int, 2>{2, 1}));
  EXPECT_EQ(count[G::G5a], (std::array<int, 2>{8, 0}));
  EXPECT_EQ(count[G::G5b], (std::array<int, 2>{16, 0}));
  EXPECT_EQ(count[G::G5ent], (std::array<int, 2>{0, 8}));
  EXPECT_EQ(count[G::Unassigned], (std::array<int, 2>{0, 1}));
}

TEST(Groups, MollerFiveSplitMembers) {
  EXPECT_EQ(group_members(Process::Moller, G::G5a), (std::vector<int>{5, 6, 7, 8, 13, 14, 15, 16}));
  std::vector<int> b{9, 10, 11, 12};
  for (int i = 21; i <= 32; ++i) b.push_back(i);
  EXPECT_EQ(group_members(Process::Moller, G::G5b), b);
}

TEST(Groups, LabelsRoundTrip) {
  for (G g : {G::G1, G::G2, G::G3, G::G4, G::G5a, G::G5b, G::G5ent, G::Unassigned})
    EXPECT_EQ(parse_group_label(to_string(g)), g);
  EXPECT_FALSE(parse_group_label("G6").has_value());
  EXPECT_EQ(parse_process("nn"), Process::NN);
  EXPECT_EQ(parse_process("moller"), Process::Moller);
  EXPECT_FALSE(parse_process("bhabha").has_value());
}

TEST(Representatives, Nn) {
  const auto reps = representatives(Process::NN);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps[0].first, G::G1);
  EXPECT_EQ(reps[0].second, normalize(kron(kUp, kUp)));
  EXPECT_EQ(reps[1].first, G::G2);
  EXPECT_EQ(reps[1].second, normalize(kron(kUp, kDown)));
  EXPECT_EQ(reps[2].first, G::G3);
  EXPECT_LE(max_abs_diff(reps[2].second.amps(), normalize(kron(kPlus, kUp)).amps()), 1e-15);
}

TEST(Representatives, Moller) {
  const auto reps = representatives(Process::Moller);
  ASSERT_EQ(reps.size(), 6u);
  EXPECT_EQ(reps[0].first, G::G1);
  EXPECT_EQ(reps[0].second, normalize(kron(kUp, kUp)));
  EXPECT_EQ(reps[5].first, G::G5b);
  EXPECT_LE(max_abs_diff(reps[5].second.amps(), normalize(kron(kUp, kPlus)).amps()), 1e-15);
}

TEST(Representatives, AreAtlasMembersOfTheirGroup) {
  for (Process p : {Process::NN, Process::Moller})
    for (const auto& [label, state] : representatives(p)) {
      bool found = false;
      for (int idx : group_members(p, label))
        found = found || std::abs(std::abs(inner(stabilizer(idx).state.amps(), state.amps())) - 1.0) < 1e-12;
      EXPECT_TRUE(found) << to_string(p) << " " << to_string(label);
    }
}

TEST(Groups, NnMembersShareFinalMagic) {
  for (G g : {G::G1, G::G2, G::G3})
    for (int k = 0; k < 25; ++k) {
      const double d = std::numbers::pi / 2 * k / 24;
      const Evolution ev = nn::evolution(0.0, d);
      const auto members = group_members(Process::NN, g);
      const double ref = m_lin(ev(stabilizer(members.front()).state));
      for (int idx : members) EXPECT_NEAR(m_lin(ev(stabilizer(idx).state)), ref, 1e-10) << idx;
    }
}

TEST(Groups, MollerMembersShareFinalMagic) {
  for (G g : {G::G1, G::G2, G::G3, G::G4, G::G5a, G::G5b, G::G5ent})
    for (int k = 1; k <= 25; ++k) {
      const moller::ScatteringAngle th(std::numbers::pi * k / 27);
      const auto members = group_members(Process::Moller, g);
      const double ref = m_lin(moller::final_state(th, stabilizer(members.front()).state));
      for (int idx : members) EXPECT_NEAR(m_lin(moller::final_state(th, stabilizer(idx).state)), ref, 1e-10) << idx;
    }
}

}  // namespace
}  // namespace qmagic
