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

#include "qmagic/nlopt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qmagic/measures.hpp"
#include "qmagic/random.hpp"

namespace qmagic {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStabilizerCutoff = 1e-12;
constexpr double kStartStep = 0.6;
constexpr double kPolishStep = 0.05;
constexpr int kPolishRounds = 3;

using Point = std::array<double, 6>;

double wrap(double a, double period) {
  double r = std::fmod(a, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

// (U_A (x) U_B) v without forming the 4x4 product.
Vec4 apply_local(const Operator2& ua, const Operator2& ub, const Vec4& v) {
  Vec4 t{};  // (I (x) U_B) v
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t[2 * a + b] = ub(b, 0) * v[2 * a] + ub(b, 1) * v[2 * a + 1];
  Vec4 w{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) w[2 * a + b] = ua(a, 0) * t[b] + ua(a, 1) * t[2 + b];
  return w;
}

class Objective {
 public:
  explicit Objective(const TwoQubitState& psi) : psi_(psi) {}

  double operator()(const Point& x) {
    ++evals_;
    const Operator2 ua = local_unitary(x[0], x[1], x[2]);
    const Operator2 ub = local_unitary(x[3], x[4], x[5]);
    return 1.0 - stabilizer_purity(apply_local(ua, ub, psi_.amps()));
  }

  long evals() const { return evals_; }

 private:
  const TwoQubitState& psi_;
  long evals_ = 0;
};

struct Minimum {
  Point x{};
  double f = 0.0;
};

// Nelder-Mead with standard coefficients. Stops when the spread of simplex
// values is within f_tol, the simplex diameter is within x_tol, or the
// evaluation budget is spent.
Minimum nelder_mead(Objective& f, const Point& x0, double step, const OptimizerConfig& cfg) {
  constexpr std::size_t n = 6;
  std::array<Point, n + 1> s;
  std::array<double, n + 1> v;
  s[0] = x0;
  for (std::size_t i = 0; i < n; ++i) {
    s[i + 1] = x0;
    s[i + 1][i] += step;
  }
  int used = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    v[i] = f(s[i]);
    ++used;
  }

  std::array<std::size_t, n + 1> order;
  auto sort_simplex = [&] {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::array<Point, n + 1> s2;
    std::array<double, n + 1> v2;
    for (std::size_t i = 0; i <= n; ++i) {
      s2[i] = s[order[i]];
      v2[i] = v[order[i]];
    }
    s = s2;
    v = v2;
  };

  auto along = [](const Point& c, const Point& w, double t) {
    Point p;
    for (std::size_t k = 0; k < n; ++k) p[k] = c[k] + t * (w[k] - c[k]);
    return p;
  };

  while (true) {
    sort_simplex();
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k) diameter = std::max(diameter, std::abs(s[i][k] - s[0][k]));
    if (v[n] - v[0] <= cfg.f_tol || diameter <= cfg.x_tol || used >= cfg.max_evals) break;

    Point centroid{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += s[i][k] / n;

    const Point xr = along(centroid, s[n], -1.0);
    const double fr = f(xr);
    ++used;
    if (fr < v[0]) {
      const Point xe = along(centroid, s[n], -2.0);
      const double fe = f(xe);
      ++used;
      if (fe < fr) {
        s[n] = xe;
        v[n] = fe;
      } else {
        s[n] = xr;
        v[n] = fr;
      }
      continue;
    }
    if (fr < v[n - 1]) {
      s[n] = xr;
      v[n] = fr;
      continue;
    }
    const bool outside = fr < v[n];
    const Point xc = outside ? along(centroid, s[n], -0.5) : along(centroid, s[n], 0.5);
    const double fc = f(xc);
    ++used;
    if (fc < (outside ? fr : v[n])) {
      s[n] = xc;
      v[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      s[i] = along(s[0], s[i], 0.5);
      v[i] = f(s[i]);
      ++used;
    }
  }
  return {s[0], v[0]};
}

double halton(std::uint64_t index, std::uint64_t base) {
  double result = 0.0;
  double frac = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += frac * static_cast<double>(index % base);
    index /= base;
    frac /= static_cast<double>(base);
  }
  return result;
}

// Start points: the first half Halton (bases 2..13, index skipping 0), the rest seeded-random.
std::vector<Point> start_points(const OptimizerConfig& cfg) {
  constexpr std::array<std::uint64_t, 6> bases{2, 3, 5, 7, 11, 13};
  constexpr std::array<double, 6> span{kTwoPi, std::numbers::pi, kTwoPi, kTwoPi, std::numbers::pi, kTwoPi};
  const int n_lds = cfg.starts / 2;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(std::max(cfg.starts, 0)));
  for (int i = 0; i < n_lds; ++i) {
    Point p;
    for (std::size_t k = 0; k < 6; ++k) p[k] = span[k] * halton(static_cast<std::uint64_t>(i) + 1, bases[k]);
    pts.push_back(p);
  }
  Rng rng(cfg.seed);
  for (int i = n_lds; i < cfg.starts; ++i) {
    Point p;
    for (std::size_t k = 0; k < 6; ++k) p[k] = rng.uniform(0.0, span[k]);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

Operator2 local_unitary(double phi, double theta, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const cplx sum = std::polar(1.0, (phi + lambda) / 2.0);
  const cplx diff = std::polar(1.0, (phi - lambda) / 2.0);
  Operator2 u;
  u(0, 0) = std::conj(sum) * c;
  u(0, 1) = -std::conj(diff) * s;
  u(1, 0) = diff * s;
  u(1, 1) = sum * c;
  return u;
}

Operator2 LocalFrame::unitary_a() const { return local_unitary(angles[0], angles[1], angles[2]); }
Operator2 LocalFrame::unitary_b() const { return local_unitary(angles[3], angles[4], angles[5]); }
Operator4 LocalFrame::op() const { return kron(unitary_a(), unitary_b()); }

LocalFrame LocalFrame::canonical(const std::array<double, 6>& raw) {
  LocalFrame f;
  for (std::size_t q = 0; q < 2; ++q) {
    double phi = raw[3 * q];
    double theta = wrap(raw[3 * q + 1], kTwoPi);
    double lambda = raw[3 * q + 2];
    // Ry(theta) = -Ry(theta - 2pi), and Rz(phi) Ry(-t) Rz(lambda) = -Rz(phi + pi) Ry(t) Rz(lambda + pi).
    if (theta > std::numbers::pi) {
      theta = kTwoPi - theta;
      phi += std::numbers::pi;
      lambda += std::numbers::pi;
    }
    f.angles[3 * q] = wrap(phi, kTwoPi);
    f.angles[3 * q + 1] = theta;
    f.angles[3 * q + 2] = wrap(lambda, kTwoPi);
  }
  return f;
}

double frame_m_lin(const LocalFrame& frame, const TwoQubitState& psi) {
  return 1.0 - stabilizer_purity(apply_local(frame.unitary_a(), frame.unitary_b(), psi.amps()));
}

NlResult nonlocal_magic(const TwoQubitState& psi, const OptimizerConfig& cfg) {
  NlResult result;
  Objective f(psi);
  const double total = f(Point{});
  if (total < kStabilizerCutoff) {
    result.m_nl = 0.0;
    result.evaluations = f.evals();
    return result;
  }

  // The identity frame is a probe too, so the result never exceeds M_lin(psi).
  Minimum best{Point{}, total};
  for (const Point& x0 : start_points(cfg)) {
    const Minimum m = nelder_mead(f, x0, kStartStep, cfg);
    ++result.starts_used;
    if (m.f < best.f) best = m;
  }

  // Restart from the best point until a restart no longer helps.
  result.converged = false;
  for (int round = 0; round < kPolishRounds && !result.converged; ++round) {
    const Minimum polished = nelder_mead(f, best.x, kPolishStep, cfg);
    result.converged = best.f - polished.f <= cfg.f_tol;
    if (polished.f < best.f) best = polished;
  }

  result.m_nl = std::max(0.0, best.f);
  result.frame = LocalFrame::canonical(best.x);
  result.evaluations = f.evals();
  return result;
}

double nl_via_antiflatness(const TwoQubitState& psi) { return 4.0 * anti_flatness(psi); }

}  // namespace qmagic
