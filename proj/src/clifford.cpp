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

#include "qmagic/clifford.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/parallel.hpp"

namespace qmagic {
namespace {

constexpr double kPauliTol = 1e-10;

// Pauli strings whose images fix a Clifford up to phase: XI, ZI, IX, IZ.
constexpr std::array<int, 4> kTableauGenerators{4 * 0 + 3, 4 * 2 + 3, 4 * 3 + 0, 4 * 3 + 2};

constexpr std::array<Gate, 5> kGates{Gate::H1, Gate::H2, Gate::S1, Gate::S2, Gate::CNOT12};

struct Group {
  std::vector<CliffordElement> elements;
  std::unordered_map<TableauKey, std::size_t> by_key;
};

Group build_group() {
  Group g;
  CliffordElement id{Operator4::identity(), {}, *tableau_key(Operator4::identity())};
  g.by_key.emplace(id.tableau, 0);
  g.elements.push_back(std::move(id));

  std::array<Operator4, kGates.size()> mats;
  for (std::size_t k = 0; k < kGates.size(); ++k) mats[k] = gate_matrix(kGates[k]);

  // The element vector doubles as the BFS queue.
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (std::size_t k = 0; k < kGates.size(); ++k) {
      Operator4 next = mats[k] * g.elements[head].op;
      const auto key = tableau_key(next);
      if (!key) throw std::logic_error("Clifford closure produced a non-Clifford matrix");
      if (g.by_key.contains(*key)) continue;
      std::vector<Gate> word = g.elements[head].word;
      word.push_back(kGates[k]);
      g.by_key.emplace(*key, g.elements.size());
      g.elements.push_back({next, std::move(word), *key});
    }
  }
  return g;
}

const Group& group() {
  static const Group g = build_group();
  return g;
}

}  // namespace

std::string_view to_string(Gate g) {
  switch (g) {
    case Gate::H1: return "H1";
    case Gate::H2: return "H2";
    case Gate::S1: return "S1";
    case Gate::S2: return "S2";
    case Gate::CNOT12: return "CNOT12";
  }
  return "?";
}

Operator4 gate_matrix(Gate g) {
  const double r = 1.0 / std::numbers::sqrt2;
  Operator2 h;
  h(0, 0) = r;
  h(0, 1) = r;
  h(1, 0) = r;
  h(1, 1) = -r;
  const Operator2 s = Operator2::diag(1.0, cplx{0.0, 1.0});
  const Operator2 id = Operator2::identity();
  switch (g) {
    case Gate::H1: return kron(h, id);
    case Gate::H2: return kron(id, h);
    case Gate::S1: return kron(s, id);
    case Gate::S2: return kron(id, s);
    case Gate::CNOT12: {
      Operator4 c;
      c(0, 0) = 1.0;
      c(1, 1) = 1.0;
      c(2, 3) = 1.0;
      c(3, 2) = 1.0;
      return c;
    }
  }
  return Operator4::identity();
}

Operator4 pauli_string(int index) {
  return kron(pauli(kPaulis[static_cast<std::size_t>(index / 4)]), pauli(kPaulis[static_cast<std::size_t>(index % 4)]));
}

std::optional<SignedPauli> conjugate_pauli(const Operator4& u, int pauli_index) {
  static const auto strings = [] {
    std::array<Operator4, 16> s;
    for (int k = 0; k < 16; ++k) s[static_cast<std::size_t>(k)] = pauli_string(k);
    return s;
  }();
  const Operator4 image = u * strings[static_cast<std::size_t>(pauli_index)] * adjoint(u);
  for (int q = 0; q < 16; ++q) {
    // Tr(Q image) / 4 is the Q component of the image.
    const Operator4& pq = strings[static_cast<std::size_t>(q)];
    cplx t{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) t += pq(r, c) * image(c, r);
    t /= 4.0;
    if (std::abs(std::abs(t) - 1.0) <= kPauliTol && std::abs(t.imag()) <= kPauliTol)
      return SignedPauli{q, t.real() > 0 ? 1 : -1};
  }
  return std::nullopt;
}

std::optional<TableauKey> tableau_key(const Operator4& u) {
  TableauKey key = 0;
  for (std::size_t k = 0; k < kTableauGenerators.size(); ++k) {
    const auto img = conjugate_pauli(u, kTableauGenerators[k]);
    if (!img) return std::nullopt;
    const TableauKey field = static_cast<TableauKey>(img->index * 2 + (img->sign < 0 ? 1 : 0));
    key |= field << (5 * k);
  }
  return key;
}

const std::vector<CliffordElement>& clifford_group() { return group().elements; }

std::optional<std::size_t> find_clifford(TableauKey key) {
  const auto& m = group().by_key;
  const auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

const CliffordElement& sample_clifford(Rng& rng) {
  const auto& els = clifford_group();
  return els[rng.index(els.size())];
}

double c_factor(int d, int d_a) {
  if (d < 2 || d_a < 2 || d % d_a != 0)
    throw Error(ErrorKind::InvalidDims, "c_factor needs d, dA >= 2 with dA dividing d");
  const double dd = d;
  const double da = d_a;
  return (dd * dd - da * da) * (da * da - 1.0) / ((dd * dd - 1.0) * (dd + 2.0) * da * da);
}

CliffordAverage clifford_averaged_antiflatness(const TwoQubitState& psi, AverageMode mode, std::size_t samples,
                                               std::uint64_t seed, unsigned threads) {
  const auto& els = clifford_group();
  std::vector<std::size_t> picks;
  if (mode == AverageMode::Exhaustive) {
    picks.resize(els.size());
    for (std::size_t i = 0; i < els.size(); ++i) picks[i] = i;
  } else {
    if (samples < 2) throw Error(ErrorKind::InvalidArgument, "sampled mode needs at least 2 samples");
    Rng rng(seed);
    picks.resize(samples);
    for (auto& p : picks) p = rng.index(els.size());
  }

  const std::vector<double> values = parallel_map(picks.size(), threads, [&](std::size_t i) {
    return anti_flatness(normalize(apply(els[picks[i]].op, psi)));
  });
  const double n = static_cast<double>(values.size());
  const double mean = pairwise_sum(values) / n;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
  const double ss = pairwise_sum(sq);

  CliffordAverage out;
  out.mode = mode;
  out.samples = values.size();
  out.mean_f = mean;
  if (mode == AverageMode::Exhaustive) {
    out.std_dev = std::sqrt(ss / n);
    out.std_err = 0.0;
  } else {
    out.std_dev = std::sqrt(ss / (n - 1.0));
    out.std_err = out.std_dev / std::sqrt(n);
  }
  return out;
}

}  // namespace qmagic
