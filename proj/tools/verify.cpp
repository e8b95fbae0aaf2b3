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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/moller.hpp"
#include "qmagic/nn.hpp"
#include "qmagic/parallel.hpp"
#include "qmagic/random.hpp"
#include "qmagic/stabilizers.hpp"

namespace qmagic::cli {
namespace {

constexpr double kClosedTol = 1e-10;
constexpr double kNlTol = 1e-6;

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

std::vector<TwoQubitState> random_states(int n, std::uint64_t seed) {
  std::vector<TwoQubitState> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    out.push_back(haar_state(rng));
  }
  return out;
}

TwoQubitState representative(Process p, GroupLabel g) {
  for (const auto& [label, st] : representatives(p))
    if (label == g) return st;
  throw Error(ErrorKind::InvalidArgument, "no representative for " + std::string(to_string(g)));
}

// Moller final state, or nothing when the amplitude for this input vanishes.
std::optional<TwoQubitState> scatter(const moller::ScatteringAngle& th, const TwoQubitState& psi) {
  try {
    return moller::final_state(th, psi);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroVector) throw;
    return std::nullopt;
  }
}

VerifyReport four_af(const VerifyOptions& opt) {
  const int n = opt.n.value_or(1000);
  const auto states = random_states(n, opt.seed);
  struct Row {
    double dev = 0.0, excess = 0.0;
    bool converged = true;
  };
  const auto rows = parallel_map(states.size(), opt.threads, [&](std::size_t i) {
    const NlResult r = nonlocal_magic(states[i], opt.optimizer);
    return Row{std::abs(r.m_nl - nl_via_antiflatness(states[i])), std::max(0.0, r.m_nl - m_lin(states[i])),
               r.converged};
  });
  std::vector<double> dev, excess;
  int not_converged = 0;
  for (const auto& r : rows) {
    dev.push_back(r.dev);
    excess.push_back(r.excess);
    not_converged += r.converged ? 0 : 1;
  }
  VerifyReport rep;
  rep.suite = "four-af";
  rep.checks.push_back({"max |m_nl - 4 f_a|", max_of(dev), kNlTol});
  rep.checks.push_back({"max (m_nl - m_lin)", max_of(excess), 1e-12});
  rep.info["states"] = n;
  rep.info["seed"] = opt.seed;
  rep.info["not_converged"] = not_converged;
  return rep;
}

VerifyReport clifford_id(const VerifyOptions& opt) {
  const int n = opt.n.value_or(50);
  const auto states = random_states(n, opt.seed);
  const double c = c_factor(4, 2);
  VerifyReport rep;
  rep.suite = "clifford-id";
  std::vector<double> dev;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const CliffordAverage avg = clifford_averaged_antiflatness(
        states[i], opt.mode, opt.samples, derive_seed(opt.seed ^ 0x5a5aULL, i), opt.threads);
    const double diff = std::abs(avg.mean_f - c * m_lin(states[i]));
    dev.push_back(opt.mode == AverageMode::Exhaustive ? diff : diff / avg.std_err);
  }
  if (opt.mode == AverageMode::Exhaustive)
    rep.checks.push_back({"max |<F> - m_lin/10|", max_of(dev), kClosedTol});
  else
    rep.checks.push_back({"max |<F> - m_lin/10| / std_err", max_of(dev), 3.0});
  rep.info["states"] = n;
  rep.info["seed"] = opt.seed;
  rep.info["mode"] = opt.mode == AverageMode::Exhaustive ? "exhaustive" : "sampled";
  if (opt.mode == AverageMode::Sampled) rep.info["samples"] = opt.samples;
  return rep;
}

void count_check(VerifyReport& rep, const std::string& name, std::size_t got, std::size_t want) {
  rep.checks.push_back({name, std::abs(static_cast<double>(got) - static_cast<double>(want)), 0.0});
}

VerifyReport groups_nn(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "groups-nn";
  const int p = std::max(opt.points, 2);
  std::vector<double> grid;
  for (int k = 0; k < p; ++k) grid.push_back(std::numbers::pi / 2.0 * k / (p - 1));

  static constexpr std::array<std::array<std::size_t, 2>, 3> kCounts{{{6, 10}, {6, 6}, {24, 8}}};
  static constexpr std::array<GroupLabel, 3> kLabels{GroupLabel::G1, GroupLabel::G2, GroupLabel::G3};
  for (std::size_t g = 0; g < kLabels.size(); ++g) {
    const GroupLabel label = kLabels[g];
    const std::string name(to_string(label));
    const auto tensor = initial_indices(Process::NN, InitialSet::Tensor, label);
    const auto ent = initial_indices(Process::NN, InitialSet::Entangled, label);
    count_check(rep, name + " tensor count", tensor.size(), kCounts[g][0]);
    count_check(rep, name + " entangled count", ent.size(), kCounts[g][1]);

    const TwoQubitState rep_state = representative(Process::NN, label);
    struct Dev {
      double m_lin = 0.0, f_a = 0.0, m_nl = 0.0, saturation = 0.0;
    };
    const auto devs = parallel_map(grid.size(), opt.threads, [&](std::size_t k) {
      const auto forms = nn::group_closed_forms(grid[k], label);
      const Evolution ev = nn::evolution(0.0, grid[k]);
      Dev d;
      for (int idx : group_members(Process::NN, label)) {
        const TwoQubitState chi = ev(stabilizer(idx).state);
        d.m_lin = std::max(d.m_lin, std::abs(m_lin(chi) - forms.m_lin));
        if (!stabilizer(idx).entangled) d.f_a = std::max(d.f_a, std::abs(anti_flatness(chi) - forms.f_a));
      }
      const TwoQubitState chi = ev(rep_state);
      const double nl = nonlocal_magic(chi, opt.optimizer).m_nl;
      d.m_nl = std::abs(nl - forms.m_nl);
      d.saturation = std::abs(nl - m_lin(chi));
      return d;
    });
    Dev worst;
    for (const auto& d : devs) {
      worst.m_lin = std::max(worst.m_lin, d.m_lin);
      worst.f_a = std::max(worst.f_a, d.f_a);
      worst.m_nl = std::max(worst.m_nl, d.m_nl);
      worst.saturation = std::max(worst.saturation, d.saturation);
    }
    rep.checks.push_back({name + " m_lin vs closed form", worst.m_lin, kClosedTol});
    rep.checks.push_back({name + " f_a vs closed form", worst.f_a, kClosedTol});
    rep.checks.push_back({name + " m_nl vs closed form", worst.m_nl, kNlTol});
    if (label == GroupLabel::G2) rep.checks.push_back({"G2 m_nl = m_lin", worst.saturation, kNlTol});
  }
  rep.info["points"] = p;
  return rep;
}

VerifyReport groups_moller(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "groups-moller";
  const int p = std::max(opt.points, 2);
  std::vector<double> grid;
  for (int k = 1; k <= p; ++k) grid.push_back(std::numbers::pi * k / (p + 1));

  static constexpr std::array<std::pair<GroupLabel, std::size_t>, 8> kCounts{{{GroupLabel::G1, 8},
                                                                              {GroupLabel::G2, 8},
                                                                              {GroupLabel::G3, 8},
                                                                              {GroupLabel::G4, 3},
                                                                              {GroupLabel::G5a, 8},
                                                                              {GroupLabel::G5b, 16},
                                                                              {GroupLabel::G5ent, 8},
                                                                              {GroupLabel::Unassigned, 1}}};
  for (const auto& [label, want] : kCounts)
    count_check(rep, std::string(to_string(label)) + " count", group_members(Process::Moller, label).size(), want);

  int skipped = 0;
  for (const auto& [label, want] : kCounts) {
    if (label == GroupLabel::Unassigned) continue;
    const std::string name(to_string(label));
    const bool has_rep = label != GroupLabel::G5ent;
    struct Dev {
      double m_lin = 0.0, f_a = 0.0, m_nl = 0.0;
      int skipped = 0;
    };
    const auto devs = parallel_map(grid.size(), opt.threads, [&](std::size_t k) {
      const moller::ScatteringAngle th(grid[k]);
      const double ml = moller::group_m_lin(th, label);
      Dev d;
      for (int idx : group_members(Process::Moller, label)) {
        const auto chi = scatter(th, stabilizer(idx).state);
        if (!chi) {
          ++d.skipped;
          continue;
        }
        d.m_lin = std::max(d.m_lin, std::abs(m_lin(*chi) - ml));
        if (!stabilizer(idx).entangled)
          d.f_a = std::max(d.f_a, std::abs(anti_flatness(*chi) - moller::group_anti_flatness(th, label)));
      }
      if (has_rep) {
        const TwoQubitState chi = moller::final_state(th, representative(Process::Moller, label));
        d.m_nl = std::abs(nonlocal_magic(chi, opt.optimizer).m_nl - 4.0 * moller::group_anti_flatness(th, label));
      }
      return d;
    });
    Dev worst;
    for (const auto& d : devs) {
      worst.m_lin = std::max(worst.m_lin, d.m_lin);
      worst.f_a = std::max(worst.f_a, d.f_a);
      worst.m_nl = std::max(worst.m_nl, d.m_nl);
      skipped += d.skipped;
    }
    rep.checks.push_back({name + " m_lin vs closed form", worst.m_lin, kClosedTol});
    if (has_rep) {
      rep.checks.push_back({name + " f_a vs closed form", worst.f_a, kClosedTol});
      rep.checks.push_back({name + " m_nl vs closed form", worst.m_nl, kNlTol});
    }
  }

  // Entangled inputs with a listed group.
  std::vector<int> entangled;
  for (int idx : initial_indices(Process::Moller, InitialSet::Entangled))
    if (group_of(Process::Moller, idx) != GroupLabel::Unassigned) entangled.push_back(idx);
  struct EntDev {
    double m_nl = 0.0, e_lin = 0.0;
  };
  const auto ent = parallel_map(grid.size(), opt.threads, [&](std::size_t k) {
    const moller::ScatteringAngle th(grid[k]);
    EntDev d;
    for (int idx : entangled) {
      const auto chi = scatter(th, stabilizer(idx).state);
      if (!chi) continue;
      d.m_nl = std::max(d.m_nl, nonlocal_magic(*chi, opt.optimizer).m_nl);
      d.e_lin = std::max(d.e_lin, std::abs(linear_entropy(*chi) - 0.5));
    }
    return d;
  });
  EntDev worst;
  for (const auto& d : ent) {
    worst.m_nl = std::max(worst.m_nl, d.m_nl);
    worst.e_lin = std::max(worst.e_lin, d.e_lin);
  }
  count_check(rep, "assigned entangled count", entangled.size(), 23);
  rep.checks.push_back({"entangled inputs max m_nl", worst.m_nl, kNlTol});
  rep.checks.push_back({"entangled inputs max |e_lin - 1/2|", worst.e_lin, kClosedTol});

  auto unassigned = nlohmann::ordered_json::array();
  for (const auto& row : moller::audit_groups()) {
    if (row.listed != GroupLabel::Unassigned) continue;
    unassigned.push_back({{"index", row.index}, {"listed", to_string(row.listed)}, {"computed", to_string(row.computed)}});
  }
  rep.info["points"] = p;
  rep.info["zero_amplitude_skips"] = skipped;
  rep.info["unassigned"] = unassigned;
  return rep;
}

}  // namespace

bool VerifyReport::pass() const { return first_failure() == nullptr; }

const Check* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass()) return &c;
  return nullptr;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"max_deviation", c.max_deviation}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
  j["checks"] = arr;
  const Check* f = first_failure();
  j["first_failure"] = f ? nlohmann::ordered_json(f->name) : nlohmann::ordered_json(nullptr);
  j["info"] = info;
  return j;
}

std::vector<std::string> verify_suites() { return {"four-af", "clifford-id", "groups-nn", "groups-moller"}; }

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt) {
  if (opt.n && *opt.n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be positive");
  if (suite == "four-af") return four_af(opt);
  if (suite == "clifford-id") return clifford_id(opt);
  if (suite == "groups-nn") return groups_nn(opt);
  if (suite == "groups-moller") return groups_moller(opt);
  throw Error(ErrorKind::InvalidArgument, "unknown verify suite '" + suite + "'");
}

}  // namespace qmagic::cli
