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

#include "qmagic/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/parallel.hpp"
#include "qmagic/random.hpp"

namespace qmagic::tomo {
namespace {

std::int64_t draw_binomial(Rng& rng, std::int64_t n, double p) {
  std::binomial_distribution<std::int64_t> dist(n, std::clamp(p, 0.0, 1.0));
  return dist(rng.engine());
}

// Anti-flatness from shot-mode axis counts.
double antiflatness_from_counts(const std::array<std::int64_t, 3>& ups, std::int64_t shots) {
  BlochMeasurement m;
  m.shots_per_axis = shots;
  const double n = static_cast<double>(shots);
  m.sx = 2.0 * static_cast<double>(ups[0]) / n - 1.0;
  m.sy = 2.0 * static_cast<double>(ups[1]) / n - 1.0;
  m.sz = 2.0 * static_cast<double>(ups[2]) / n - 1.0;
  return anti_flatness(rho_from_bloch(m));
}

}  // namespace

double BlochMeasurement::norm() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

DensityMatrix2 rho_from_bloch(const BlochMeasurement& m) {
  double sx = m.sx, sy = m.sy, sz = m.sz;
  const double r = m.norm();
  if (!std::isfinite(r)) throw Error(ErrorKind::UnphysicalBloch, "non-finite Bloch vector");
  if (r > 1.0) {
    if (!m.shots_per_axis) {
      if (r > 1.0 + kExactTol)
        throw Error(ErrorKind::UnphysicalBloch, "Bloch vector norm " + std::to_string(r) + " exceeds 1");
    } else {
      sx /= r;
      sy /= r;
      sz /= r;
    }
  }
  DensityMatrix2 d;
  d.rho(0, 0) = 0.5 * (1.0 + sz);
  d.rho(1, 1) = 0.5 * (1.0 - sz);
  d.rho(0, 1) = cplx{0.5 * sx, -0.5 * sy};
  d.rho(1, 0) = cplx{0.5 * sx, 0.5 * sy};
  return d;
}

std::array<double, 3> bloch_vector(const DensityMatrix2& rho) {
  // Tr(rho X) = 2 Re rho01, Tr(rho Y) = -2 Im rho01, Tr(rho Z) = rho00 - rho11.
  return {2.0 * rho.rho(0, 1).real(), -2.0 * rho.rho(0, 1).imag(), (rho.rho(0, 0) - rho.rho(1, 1)).real()};
}

Estimate estimate_antiflatness(const TwoQubitState& psi, std::optional<std::int64_t> shots, std::uint64_t seed,
                               int resamples) {
  const DensityMatrix2 rho = partial_trace_B(psi);
  const auto exact = bloch_vector(rho);
  Estimate e;
  if (!shots) {
    e.bloch = exact;
    e.estimate = anti_flatness(rho_from_bloch({exact[0], exact[1], exact[2], std::nullopt}));
    return e;
  }
  if (*shots < 1) throw Error(ErrorKind::InvalidArgument, "shots must be at least 1");

  std::array<std::int64_t, 3> ups{};
  for (std::size_t k = 0; k < 3; ++k) {
    Rng rng(derive_seed(seed, k));
    ups[k] = draw_binomial(rng, *shots, 0.5 * (1.0 + exact[k]));
  }
  const double n = static_cast<double>(*shots);
  const BlochMeasurement measured{2.0 * static_cast<double>(ups[0]) / n - 1.0,
                                  2.0 * static_cast<double>(ups[1]) / n - 1.0,
                                  2.0 * static_cast<double>(ups[2]) / n - 1.0, shots};
  e.bloch = {measured.sx, measured.sy, measured.sz};
  e.projected = measured.norm() > 1.0;
  e.estimate = antiflatness_from_counts(ups, *shots);

  // Resampling n Bernoulli outcomes with replacement draws Binomial(n, p_hat).
  std::vector<double> boot(static_cast<std::size_t>(std::max(resamples, 0)));
  Rng rng(derive_seed(seed, 3));
  for (auto& b : boot) {
    std::array<std::int64_t, 3> resampled{};
    for (std::size_t k = 0; k < 3; ++k)
      resampled[k] = draw_binomial(rng, *shots, static_cast<double>(ups[k]) / n);
    b = antiflatness_from_counts(resampled, *shots);
  }
  if (boot.size() >= 2) {
    const double mean = pairwise_sum(boot) / static_cast<double>(boot.size());
    double ss = 0.0;
    for (double b : boot) ss += (b - mean) * (b - mean);
    e.std_err = std::sqrt(ss / static_cast<double>(boot.size() - 1));
  }
  return e;
}

}  // namespace qmagic::tomo
