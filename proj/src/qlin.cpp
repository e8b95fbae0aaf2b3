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

#include "qmagic/qlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmagic/error.hpp"
#include "qmagic/random.hpp"

namespace qmagic {

Operator2 Operator2::identity() { return diag(1.0, 1.0); }

Operator2 Operator2::diag(cplx a, cplx b) {
  Operator2 r;
  r(0, 0) = a;
  r(1, 1) = b;
  return r;
}

Operator4 Operator4::identity() { return diag(1.0, 1.0, 1.0, 1.0); }

Operator4 Operator4::diag(cplx a, cplx b, cplx c, cplx d) {
  Operator4 r;
  r(0, 0) = a;
  r(1, 1) = b;
  r(2, 2) = c;
  r(3, 3) = d;
  return r;
}

Operator2 pauli(Pauli p) {
  const cplx i{0.0, 1.0};
  Operator2 r;
  switch (p) {
    case Pauli::X:
      r(0, 1) = 1.0;
      r(1, 0) = 1.0;
      break;
    case Pauli::Y:
      r(0, 1) = -i;
      r(1, 0) = i;
      break;
    case Pauli::Z:
      r = Operator2::diag(1.0, -1.0);
      break;
    case Pauli::I:
      r = Operator2::identity();
      break;
  }
  return r;
}

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
    case Pauli::I: return 'I';
  }
  return '?';
}

TwoQubitState TwoQubitState::basis(std::size_t index) {
  if (index > 3) throw Error(ErrorKind::IndexOutOfRange, "basis index must be in 0..3");
  Vec4 v{};
  v[index] = 1.0;
  return TwoQubitState(v);
}

double DensityMatrix2::trace() const { return (rho(0, 0) + rho(1, 1)).real(); }

double DensityMatrix2::purity() const {
  const Operator2 sq = rho * rho;
  return (sq(0, 0) + sq(1, 1)).real();
}

double DensityMatrix2::cube_trace() const {
  const Operator2 sq = rho * rho;
  const Operator2 cu = sq * rho;
  return (cu(0, 0) + cu(1, 1)).real();
}

bool DensityMatrix2::is_valid(double tol) const {
  if (std::abs(rho(0, 1) - std::conj(rho(1, 0))) > tol) return false;
  if (std::abs(rho(0, 0).imag()) > tol || std::abs(rho(1, 1).imag()) > tol) return false;
  const double tr = trace();
  if (std::abs(tr - 1.0) > tol) return false;
  // Eigenvalues of a 2x2 Hermitian matrix: tr/2 +- sqrt((a-d)^2/4 + |b|^2).
  const double half_gap = std::sqrt(std::pow((rho(0, 0).real() - rho(1, 1).real()) / 2.0, 2) +
                                    std::norm(rho(0, 1)));
  return tr / 2.0 - half_gap >= -tol;
}

Operator2 operator*(const Operator2& a, const Operator2& b) {
  Operator2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Operator4 operator*(const Operator4& a, const Operator4& b) {
  Operator4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Operator2 operator+(const Operator2& a, const Operator2& b) {
  Operator2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Operator2 operator*(cplx s, const Operator2& a) {
  Operator2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
  return r;
}

Operator2 adjoint(const Operator2& a) {
  Operator2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

Operator4 adjoint(const Operator4& a) {
  Operator4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

Operator4 kron(const Operator2& a, const Operator2& b) {
  Operator4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Vec4 kron(const Vec2& a, const Vec2& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Vec2 apply(const Operator2& op, const Vec2& v) {
  return {op(0, 0) * v[0] + op(0, 1) * v[1], op(1, 0) * v[0] + op(1, 1) * v[1]};
}

Vec4 apply(const Operator4& op, const Vec4& v) {
  Vec4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i] += op(i, j) * v[j];
  return r;
}

double norm(const Vec4& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

TwoQubitState normalize(const Vec4& v) {
  for (const auto& a : v)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorKind::ZeroVector, "non-finite amplitude");
  double n2 = 0.0;
  for (const auto& a : v) n2 += std::norm(a);
  const double n = std::sqrt(n2);
  if (n <= kZeroNormTol) throw Error(ErrorKind::ZeroVector, "vector norm below 1e-14");

  // The phase reference is the first amplitude that is nonzero relative to the norm.
  std::size_t lead = 0;
  while (lead < 3 && std::abs(v[lead]) <= kZeroNormTol * n) ++lead;
  const double lead_abs = std::abs(v[lead]);
  const cplx phase = std::conj(v[lead]) / lead_abs;

  Vec4 out = v;
  if (phase != cplx{1.0, 0.0})
    for (auto& a : out) a *= phase;
  out[lead] = {out[lead].real(), 0.0};

  // Leave an already-unit vector untouched so normalize is idempotent bit for bit.
  if (std::abs(n2 - 1.0) > 8.0 * std::numeric_limits<double>::epsilon())
    for (auto& a : out) a /= n;
  return TwoQubitState(out);
}

cplx inner(const Vec4& a, const Vec4& b) {
  cplx s{};
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

cplx expectation(const Operator4& op, const Vec4& v) { return inner(v, apply(op, v)); }

DensityMatrix2 partial_trace_B(const TwoQubitState& psi) {
  const Vec4& a = psi.amps();
  DensityMatrix2 d;
  d.rho(0, 0) = std::norm(a[0]) + std::norm(a[1]);
  d.rho(1, 1) = std::norm(a[2]) + std::norm(a[3]);
  d.rho(0, 1) = a[0] * std::conj(a[2]) + a[1] * std::conj(a[3]);
  d.rho(1, 0) = std::conj(d.rho(0, 1));
  return d;
}

bool is_unitary(const Operator2& u, double tol) {
  return max_abs_diff(adjoint(u) * u, Operator2::identity()) <= tol;
}

bool is_unitary(const Operator4& u, double tol) {
  return max_abs_diff(adjoint(u) * u, Operator4::identity()) <= tol;
}

double max_abs_diff(const Operator2& a, const Operator2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

double max_abs_diff(const Operator4& a, const Operator4& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

double max_abs_diff(const Vec4& a, const Vec4& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

TwoQubitState haar_state(Rng& rng) {
  Vec4 v;
  for (auto& a : v) {
    const double re = rng.normal();
    a = cplx{re, rng.normal()};
  }
  return normalize(v);
}

}  // namespace qmagic
