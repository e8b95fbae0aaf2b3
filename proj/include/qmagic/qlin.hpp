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

// Exact-size complex linear algebra for one and two qubits.
//
// Two-qubit basis ordering is {|00>, |01>, |10>, |11>} with qubit A the
// left (most significant) factor and |0> = |up>, |1> = |down>. Every matrix
// in the library is written in this ordering.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qmagic {

using cplx = std::complex<double>;
using Vec2 = std::array<cplx, 2>;
using Vec4 = std::array<cplx, 4>;

inline constexpr double kExactTol = 1e-12;
inline constexpr double kZeroNormTol = 1e-14;

struct Operator2 {
  std::array<cplx, 4> m{};

  cplx& operator()(std::size_t r, std::size_t c) { return m[2 * r + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }

  static Operator2 identity();
  static Operator2 diag(cplx a, cplx b);
};

struct Operator4 {
  std::array<cplx, 16> m{};

  cplx& operator()(std::size_t r, std::size_t c) { return m[4 * r + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m[4 * r + c]; }

  static Operator4 identity();
  static Operator4 diag(cplx a, cplx b, cplx c, cplx d);
};

enum class Pauli { X = 0, Y = 1, Z = 2, I = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::X, Pauli::Y, Pauli::Z, Pauli::I};

Operator2 pauli(Pauli p);
char pauli_char(Pauli p);

/// Normalized two-qubit pure state. Apart from the |00> default, only
/// `normalize` constructs one, so the unit-norm and phase conventions hold.
class TwoQubitState {
 public:
  TwoQubitState() : amps_{cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{}} {}

  const Vec4& amps() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  // Computational basis state |ab>, index = 2a + b.
  static TwoQubitState basis(std::size_t index);

  friend bool operator==(const TwoQubitState&, const TwoQubitState&) = default;

 private:
  explicit TwoQubitState(const Vec4& amps) : amps_(amps) {}
  friend TwoQubitState normalize(const Vec4& v);

  Vec4 amps_{};
};

/// Single-qubit density matrix. Validity is checked with `is_valid`;
/// constructors in this library only produce valid ones.
struct DensityMatrix2 {
  Operator2 rho;

  double trace() const;
  double purity() const;  // Tr(rho^2)
  double cube_trace() const;  // Tr(rho^3)
  bool is_valid(double tol = kExactTol) const;
};

Operator2 operator*(const Operator2& a, const Operator2& b);
Operator4 operator*(const Operator4& a, const Operator4& b);
Operator2 operator+(const Operator2& a, const Operator2& b);
Operator2 operator*(cplx s, const Operator2& a);
Operator2 adjoint(const Operator2& a);
Operator4 adjoint(const Operator4& a);

Operator4 kron(const Operator2& a, const Operator2& b);
Vec4 kron(const Vec2& a, const Vec2& b);

Vec2 apply(const Operator2& op, const Vec2& v);
Vec4 apply(const Operator4& op, const Vec4& v);
inline Vec4 apply(const Operator4& op, const TwoQubitState& psi) { return apply(op, psi.amps()); }

/// Unit norm with the first nonzero amplitude made real and non-negative.
/// Throws Error(ZeroVector) when the norm is at most kZeroNormTol.
TwoQubitState normalize(const Vec4& v);

class Rng;

/// Haar-random state: normalized complex Gaussian vector.
TwoQubitState haar_state(Rng& rng);

double norm(const Vec4& v);
cplx inner(const Vec4& a, const Vec4& b);  // <a|b>
cplx expectation(const Operator4& op, const Vec4& v);  // <v|op|v>

DensityMatrix2 partial_trace_B(const TwoQubitState& psi);

bool is_unitary(const Operator2& u, double tol = kExactTol);
bool is_unitary(const Operator4& u, double tol = kExactTol);
double max_abs_diff(const Operator2& a, const Operator2& b);
double max_abs_diff(const Operator4& a, const Operator4& b);
double max_abs_diff(const Vec4& a, const Vec4& b);

}  // namespace qmagic
