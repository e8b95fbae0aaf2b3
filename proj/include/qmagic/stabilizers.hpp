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

// The sixty two-qubit stabilizer states and their per-process groupings.
//
// States 1-36 are tensor products of single-qubit stabilizer states and
// 37-60 are maximally entangled. Amplitudes are stored as unnormalized
// Gaussian-integer tuples and normalized on load.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmagic/qlin.hpp"

namespace qmagic {

inline constexpr int kNumStabilizers = 60;
inline constexpr int kNumTensorStabilizers = 36;

struct StabilizerState {
  int index = 0;
  Vec4 raw{};
  TwoQubitState state;
  bool entangled = false;
};

enum class Process { NN, Moller };

enum class GroupLabel { G1, G2, G3, G4, G5a, G5b, G5ent, Unassigned };

std::string_view to_string(Process p);
std::string_view to_string(GroupLabel g);
std::optional<GroupLabel> parse_group_label(std::string_view s);
std::optional<Process> parse_process(std::string_view s);

/// Throws Error(IndexOutOfRange) outside 1..60.
const StabilizerState& stabilizer(int index);

/// All sixty, in index order.
std::span<const StabilizerState> stabilizer_atlas();

/// Group of a stabilizer state under a process. NN uses G1..G3; Moller uses
/// G1..G4, G5a/G5b for tensor members of group 5, G5ent for its entangled
/// members, and Unassigned for state 43, which the published listing omits.
GroupLabel group_of(Process process, int index);

/// Indices carrying a label, ascending.
std::vector<int> group_members(Process process, GroupLabel label);

/// Representative tensor-product initial states per group.
std::vector<std::pair<GroupLabel, TwoQubitState>> representatives(Process process);

}  // namespace qmagic
