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

#include <cmath>

#include "qmagic/error.hpp"

namespace qmagic {
namespace {

// Table entries are in {0, 1, -1, i, -i}.
enum A : signed char { O = 0, P = 1, M = 2, I = 3, J = 4 };  // 0, +1, -1, +i, -i

constexpr std::array<std::array<A, 4>, kNumStabilizers> kTable{{
    {P, P, P, P}, {P, M, P, M}, {P, P, M, M}, {P, M, M, P},  // 1-4
    {P, P, I, I}, {P, M, I, J}, {P, P, J, J}, {P, M, J, I},  // 5-8
    {P, P, O, O}, {P, M, O, O}, {O, O, P, P}, {O, O, P, M},  // 9-12
    {P, I, P, I}, {P, J, P, J}, {P, I, M, J}, {P, J, M, I},  // 13-16
    {P, I, I, M}, {P, J, I, P}, {P, I, J, P}, {P, J, J, M},  // 17-20
    {P, I, O, O}, {P, J, O, O}, {O, O, P, I}, {O, O, P, J},  // 21-24
    {P, O, P, O}, {O, P, O, P}, {P, O, M, O}, {O, P, O, M},  // 25-28
    {P, O, I, O}, {O, P, O, I}, {P, O, J, O}, {O, P, O, J},  // 29-32
    {P, O, O, O}, {O, P, O, O}, {O, O, P, O}, {O, O, O, P},  // 33-36
    {O, P, P, O}, {P, O, O, M}, {P, O, O, P}, {O, P, M, O},  // 37-40
    {P, O, O, I}, {O, P, I, O}, {O, P, J, O}, {P, O, O, J},  // 41-44
    {P, P, P, M}, {P, P, M, P}, {P, M, P, P}, {P, M, M, M},  // 45-48
    {P, I, P, J}, {P, I, M, I}, {P, J, P, I}, {P, J, M, J},  // 49-52
    {P, P, I, J}, {P, P, J, I}, {P, M, I, I}, {P, M, J, J},  // 53-56
    {P, I, I, P}, {P, I, J, M}, {P, J, I, M}, {P, J, J, P},  // 57-60
}};

cplx entry(A a) {
  switch (a) {
    case O: return {0.0, 0.0};
    case P: return {1.0, 0.0};
    case M: return {-1.0, 0.0};
    case I: return {0.0, 1.0};
    case J: return {0.0, -1.0};
  }
  return {};
}

std::array<StabilizerState, kNumStabilizers> build_atlas() {
  std::array<StabilizerState, kNumStabilizers> atlas;
  for (int k = 0; k < kNumStabilizers; ++k) {
    StabilizerState& s = atlas[static_cast<std::size_t>(k)];
    s.index = k + 1;
    for (std::size_t c = 0; c < 4; ++c) s.raw[c] = entry(kTable[static_cast<std::size_t>(k)][c]);
    s.state = normalize(s.raw);
    s.entangled = s.index > kNumTensorStabilizers;
  }
  return atlas;
}

const std::array<StabilizerState, kNumStabilizers>& atlas() {
  static const auto a = build_atlas();
  return a;
}

bool in(int index, std::initializer_list<int> set) {
  for (int v : set)
    if (v == index) return true;
  return false;
}

bool in_range(int index, int lo, int hi) { return index >= lo && index <= hi; }

void check_index(int index) {
  if (index < 1 || index > kNumStabilizers)
    throw Error(ErrorKind::IndexOutOfRange, "stabilizer index " + std::to_string(index) + " not in 1..60");
}

GroupLabel nn_group(int index) {
  if (in(index, {1, 4, 17, 20, 33, 36}) || in_range(index, 37, 41) || in(index, {44, 45, 48, 57, 60}))
    return GroupLabel::G1;
  if (in(index, {2, 3, 18, 19, 34, 35, 42, 43, 46, 47, 58, 59})) return GroupLabel::G2;
  return GroupLabel::G3;  // 5-16, 21-32, 49-56
}

GroupLabel moller_group(int index) {
  if (in(index, {33, 36}) || in_range(index, 37, 41) || index == 44) return GroupLabel::G1;
  if (in(index, {1, 4, 17, 20, 45, 48, 57, 60})) return GroupLabel::G2;
  if (in(index, {2, 3, 18, 19, 46, 47, 58, 59})) return GroupLabel::G3;
  if (in(index, {34, 35, 42})) return GroupLabel::G4;
  if (in_range(index, 5, 8) || in_range(index, 13, 16)) return GroupLabel::G5a;
  if (in_range(index, 9, 12) || in_range(index, 21, 32)) return GroupLabel::G5b;
  if (in_range(index, 49, 56)) return GroupLabel::G5ent;
  return GroupLabel::Unassigned;  // 43
}

Vec2 up() { return {cplx{1.0}, cplx{}}; }
Vec2 down() { return {cplx{}, cplx{1.0}}; }
Vec2 plus() { return {cplx{1.0}, cplx{1.0}}; }
Vec2 minus() { return {cplx{1.0}, cplx{-1.0}}; }
Vec2 plus_i() { return {cplx{1.0}, cplx{0.0, 1.0}}; }

}  // namespace

std::string_view to_string(Process p) { return p == Process::NN ? "nn" : "moller"; }

std::string_view to_string(GroupLabel g) {
  switch (g) {
    case GroupLabel::G1: return "G1";
    case GroupLabel::G2: return "G2";
    case GroupLabel::G3: return "G3";
    case GroupLabel::G4: return "G4";
    case GroupLabel::G5a: return "G5a";
    case GroupLabel::G5b: return "G5b";
    case GroupLabel::G5ent: return "G5ent";
    case GroupLabel::Unassigned: return "Unassigned";
  }
  return "Unassigned";
}

std::optional<GroupLabel> parse_group_label(std::string_view s) {
  for (GroupLabel g : {GroupLabel::G1, GroupLabel::G2, GroupLabel::G3, GroupLabel::G4, GroupLabel::G5a,
                       GroupLabel::G5b, GroupLabel::G5ent, GroupLabel::Unassigned})
    if (to_string(g) == s) return g;
  return std::nullopt;
}

std::optional<Process> parse_process(std::string_view s) {
  if (s == "nn") return Process::NN;
  if (s == "moller") return Process::Moller;
  return std::nullopt;
}

const StabilizerState& stabilizer(int index) {
  check_index(index);
  return atlas()[static_cast<std::size_t>(index - 1)];
}

std::span<const StabilizerState> stabilizer_atlas() { return atlas(); }

GroupLabel group_of(Process process, int index) {
  check_index(index);
  return process == Process::NN ? nn_group(index) : moller_group(index);
}

std::vector<int> group_members(Process process, GroupLabel label) {
  std::vector<int> out;
  for (int i = 1; i <= kNumStabilizers; ++i)
    if (group_of(process, i) == label) out.push_back(i);
  return out;
}

std::vector<std::pair<GroupLabel, TwoQubitState>> representatives(Process process) {
  if (process == Process::NN) {
    return {{GroupLabel::G1, normalize(kron(up(), up()))},
            {GroupLabel::G2, normalize(kron(up(), down()))},
            {GroupLabel::G3, normalize(kron(plus(), up()))}};
  }
  return {{GroupLabel::G1, normalize(kron(up(), up()))},
          {GroupLabel::G2, normalize(kron(plus(), plus()))},
          {GroupLabel::G3, normalize(kron(plus(), minus()))},
          {GroupLabel::G4, normalize(kron(up(), down()))},
          {GroupLabel::G5a, normalize(kron(plus_i(), plus()))},
          {GroupLabel::G5b, normalize(kron(up(), plus()))}};
}

}  // namespace qmagic
