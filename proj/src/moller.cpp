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

#include "qmagic/moller.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"

namespace qmagic::moller {
namespace {

double sq(double x) { return x * x; }

double cot(double x) { return std::cos(x) / std::sin(x); }

bool matches(double a, double b) { return std::abs(a - b) <= 1e-9; }

}  // namespace

ScatteringAngle::ScatteringAngle(double theta, double guard) : theta_(theta) {
  if (!(guard >= 0.0) || !(theta >= guard) || !(theta <= std::numbers::pi - guard) || theta <= 0.0 ||
      theta >= std::numbers::pi)
    throw Error(ErrorKind::InvalidAngle, "theta = " + std::to_string(theta) + " outside the open interval (0, pi)");
}

double minkowski_square(const FourVector& p) { return sq(p[0]) - sq(p[1]) - sq(p[2]) - sq(p[3]); }

Kinematics Kinematics::center_of_momentum(double energy, double m_e, ScatteringAngle theta) {
  if (!(energy > 2.0 * m_e) || m_e < 0.0)
    throw Error(ErrorKind::InvalidArgument, "CM energy must exceed 2 m_e");
  Kinematics k;
  k.energy = energy;
  k.m_e = m_e;
  const double e = energy / 2.0;
  k.p_mag = std::sqrt(e * e - m_e * m_e);
  const double c = std::cos(theta.value());
  const double s = std::sin(theta.value());
  k.p1 = {e, 0.0, 0.0, k.p_mag};
  k.p2 = {e, 0.0, 0.0, -k.p_mag};
  k.p3 = {e, 0.0, k.p_mag * s, k.p_mag * c};
  k.p4 = {e, 0.0, -k.p_mag * s, -k.p_mag * c};
  auto add = [](const FourVector& a, const FourVector& b, double sign) {
    return FourVector{a[0] + sign * b[0], a[1] + sign * b[1], a[2] + sign * b[2], a[3] + sign * b[3]};
  };
  k.s = minkowski_square(add(k.p1, k.p2, 1.0));
  k.t = minkowski_square(add(k.p1, k.p3, -1.0));
  k.u = minkowski_square(add(k.p1, k.p4, -1.0));
  return k;
}

HelicityAmplitudes helicity_amplitudes(double s, double t, double u) {
  const double guard = 1e-12 * std::abs(s);
  if (std::abs(t) < guard || std::abs(u) < guard)
    throw Error(ErrorKind::ForwardBackwardSingularity, "t or u vanishes relative to s");
  return {-2.0 * sq(t + u) / (t * u), -2.0 * u / t, 2.0 * t / u};
}

Operator4 amplitude_matrix(const HelicityAmplitudes& a) {
  Operator4 m;
  m(0, 0) = a.rr_rr;
  m(1, 1) = a.rl_rl;
  m(1, 2) = a.rl_lr;
  m(2, 1) = a.rl_lr;
  m(2, 2) = a.rl_rl;
  m(3, 3) = a.rr_rr;
  return m;
}

Operator4 amplitude_matrix(ScatteringAngle theta) {
  const double th = theta.value();
  return amplitude_matrix(HelicityAmplitudes{-8.0 / sq(std::sin(th)), -2.0 * sq(cot(th / 2.0)),
                                             2.0 * sq(std::tan(th / 2.0))});
}

TwoQubitState final_state(ScatteringAngle theta, const TwoQubitState& psi) {
  return normalize(apply(amplitude_matrix(theta), psi));
}

Evolution evolution(ScatteringAngle theta) {
  const Operator4 a = amplitude_matrix(theta);
  return [a](const TwoQubitState& psi) { return normalize(apply(a, psi)); };
}

double group_m_lin(ScatteringAngle theta, GroupLabel label) {
  const double t = theta.value();
  const double s = std::sin(t);
  const double c2 = std::cos(2.0 * t);
  const double c4 = std::cos(4.0 * t);
  const double c6 = std::cos(6.0 * t);
  switch (label) {
    case GroupLabel::G1:
      return 0.0;
    case GroupLabel::G2:
      return 64.0 * std::pow(s, 4) * sq(std::cos(t)) / std::pow(c2 + 3.0, 4);
    case GroupLabel::G3:
      return 1024.0 * std::pow(s, 4) * sq(20.0 * c2 + c4 + 43.0) / std::pow(12.0 * c2 + c4 + 51.0, 4);
    case GroupLabel::G4: {
      const double k8 = std::pow(cot(t / 2.0), 8);
      return 4.0 * k8 * sq(k8 - 1.0) / std::pow(k8 + 1.0, 4);
    }
    case GroupLabel::G5a:
    case GroupLabel::G5b:
    case GroupLabel::G5ent:
      return 32.0 * std::pow(s, 4) * (799.0 * c2 - 10.0 * c4 + c6 + 1258.0) / std::pow(c2 + 7.0, 6);
    case GroupLabel::Unassigned:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "no closed form for group " + std::string(to_string(label)));
}

double group_anti_flatness(ScatteringAngle theta, GroupLabel label) {
  const double t = theta.value();
  const double s = std::sin(t);
  const double c2 = std::cos(2.0 * t);
  const double c4 = std::cos(4.0 * t);
  const double c6 = std::cos(6.0 * t);
  switch (label) {
    case GroupLabel::G1:
    case GroupLabel::G2:
    case GroupLabel::G3:
    case GroupLabel::G4:
      // Non-local magic saturates the total here, and M_NL = 4 F_A.
      return group_m_lin(theta, label) / 4.0;
    case GroupLabel::G5a:
      return 256.0 * std::pow(s, 4) * sq(c2 + 15.0) * (28.0 * c2 + c4 + 35.0) / std::pow(c2 + 7.0, 8) / 4.0;
    case GroupLabel::G5b:
      return 128.0 * std::pow(s, 8) * (175.0 * c2 + 18.0 * c4 + c6 + 318.0) / std::pow(c2 + 7.0, 8) / 4.0;
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "no anti-flatness closed form for group " + std::string(to_string(label)));
}

std::vector<AuditRow> audit_groups() {
  static constexpr std::array<double, 5> kProbe{0.3, 0.7, 1.1, 2.0, 2.6};
  static constexpr std::array<GroupLabel, 5> kTotal{GroupLabel::G1, GroupLabel::G2, GroupLabel::G3, GroupLabel::G4,
                                                    GroupLabel::G5a};
  std::vector<AuditRow> rows;
  for (const auto& st : stabilizer_atlas()) {
    AuditRow row{st.index, group_of(Process::Moller, st.index), GroupLabel::Unassigned};
    for (GroupLabel g : kTotal) {
      bool all = true;
      for (double th : kProbe) {
        const ScatteringAngle a(th);
        all = all && matches(m_lin(final_state(a, st.state)), group_m_lin(a, g));
      }
      if (!all) continue;
      row.computed = g;
      if (g == GroupLabel::G5a) {
        if (st.entangled) {
          row.computed = GroupLabel::G5ent;
        } else {
          bool is_a = true;
          for (double th : kProbe) {
            const ScatteringAngle a(th);
            is_a = is_a && matches(anti_flatness(final_state(a, st.state)), group_anti_flatness(a, GroupLabel::G5a));
          }
          row.computed = is_a ? GroupLabel::G5a : GroupLabel::G5b;
        }
      }
      break;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qmagic::moller
