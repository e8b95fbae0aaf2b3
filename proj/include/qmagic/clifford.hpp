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

// The two-qubit Clifford group modulo global phase.
//
// Elements are enumerated by breadth-first closure of {H1, H2, S1, S2,
// CNOT12} and deduplicated by their tableau: the signed Pauli images of
// XI, ZI, IX and IZ under conjugation. The tableau determines a Clifford up
// to global phase, so no matrix comparison with a tolerance is involved.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmagic/qlin.hpp"
#include "qmagic/random.hpp"

namespace qmagic {

inline constexpr std::size_t kCliffordGroupSize = 11520;

enum class Gate { H1, H2, S1, S2, CNOT12 };

std::string_view to_string(Gate g);
Operator4 gate_matrix(Gate g);

using TableauKey = std::uint32_t;

struct CliffordElement {
  Operator4 op;
  std::vector<Gate> word;  // applied left to right
  TableauKey tableau = 0;
};

// Signed Pauli string: index 4 * i + j with i, j in {X, Y, Z, I}.
struct SignedPauli {
  int index = 15;
  int sign = 1;
};

Operator4 pauli_string(int index);

/// The signed Pauli equal to U P U^dagger, or nullopt if the image is not a
/// Pauli string within 1e-10.
std::optional<SignedPauli> conjugate_pauli(const Operator4& u, int pauli_index);

/// Tableau of a Clifford unitary; nullopt if `u` is not Clifford.
std::optional<TableauKey> tableau_key(const Operator4& u);

/// The full group, built once on first use. Element 0 is the identity.
const std::vector<CliffordElement>& clifford_group();

/// Position of the element with this tableau, if any.
std::optional<std::size_t> find_clifford(TableauKey key);

/// Uniform draw over the enumerated group.
const CliffordElement& sample_clifford(Rng& rng);

/// (d^2 - dA^2)(dA^2 - 1) / ((d^2 - 1)(d + 2) dA^2). Throws InvalidDims
/// unless d, dA >= 2 and dA divides d.
double c_factor(int d, int d_a);

enum class AverageMode { Exhaustive, Sampled };

struct CliffordAverage {
  double mean_f = 0.0;
  double std_err = 0.0;  // standard error of the mean; 0 when exhaustive
  double std_dev = 0.0;  // ensemble standard deviation
  std::size_t samples = 0;
  AverageMode mode = AverageMode::Exhaustive;
};

/// Mean anti-flatness of Gamma|psi> over the whole group or over `samples`
/// uniform draws seeded by `seed`. Values are reduced by pairwise summation
/// in index order, so results do not depend on `threads`.
CliffordAverage clifford_averaged_antiflatness(const TwoQubitState& psi, AverageMode mode,
                                               std::size_t samples = 5000, std::uint64_t seed = 1,
                                               unsigned threads = 1);

}  // namespace qmagic
