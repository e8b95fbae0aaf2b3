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

#include "cli.hpp"

#include <charconv>
#include <exception>
#include <numbers>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "output.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/ensemble.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/moller.hpp"
#include "qmagic/nlopt.hpp"
#include "qmagic/nn.hpp"
#include "qmagic/parallel.hpp"
#include "qmagic/random.hpp"
#include "qmagic/stabilizers.hpp"
#include "qmagic/tomo.hpp"
#include "state_spec.hpp"
#include "verify.hpp"

namespace qmagic::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::array<GroupLabel, 8> kLabelOrder{GroupLabel::G1,  GroupLabel::G2,  GroupLabel::G3,
                                                GroupLabel::G4,  GroupLabel::G5a, GroupLabel::G5b,
                                                GroupLabel::G5ent, GroupLabel::Unassigned};

struct OptimizerFlags {
  OptimizerConfig cfg;

  void attach(CLI::App* app, const std::string& seed_flag) {
    app->add_option("--starts", cfg.starts, "optimizer multistarts")->check(CLI::PositiveNumber);
    app->add_option("--f-tol", cfg.f_tol, "optimizer function tolerance")->check(CLI::PositiveNumber);
    app->add_option("--max-evals", cfg.max_evals, "objective evaluations per start")->check(CLI::PositiveNumber);
    app->add_option(seed_flag, cfg.seed, "optimizer seed");
  }
};

struct StateFlags {
  std::string token;
  int stabilizer_index = 0;
  std::vector<double> amps;
  std::string named;

  void attach(CLI::App* app) {
    auto* s = app->add_option("--state", token, "stabilizer index, named state, or re,im x4");
    auto* i = app->add_option("--stabilizer", stabilizer_index, "stabilizer index 1..60");
    auto* a = app->add_option("--amps", amps, "8 reals: re im of the 4 amplitudes")->expected(8);
    auto* n = app->add_option("--named", named, "named state");
    s->excludes(i)->excludes(a)->excludes(n);
    i->excludes(a)->excludes(n);
    a->excludes(n);
    app->callback([s, i, a, n] {
      if (s->count() + i->count() + a->count() + n->count() == 0)
        throw CLI::RequiredError("one of --state, --stabilizer, --amps, --named");
    });
    given_ = {s, i, a, n};
  }

  TwoQubitState resolve() const {
    if (given_[0]->count()) return parse_state_token(token);
    if (given_[1]->count()) return parse_state_token(std::to_string(stabilizer_index));
    if (given_[2]->count()) return state_from_amps(amps);
    return named_state(named);
  }

 private:
  std::array<CLI::Option*, 4> given_{};
};

struct OutputFlags {
  std::string path;
  std::string format = "csv";

  void attach(CLI::App* app) {
    app->add_option("--output,-o", path, "output file (default: stdout)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  void emit(const Table& t, std::ostream& out) const {
    const std::string body = render(t, format == "json" ? Format::Json : Format::Csv);
    if (path.empty()) {
      out << body;
      return;
    }
    write_atomic(path, body);
    out << t.rows.size() << " rows written to " << path << "\n";
  }
};

std::vector<double> linspace(double a, double b, int steps) {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) v[static_cast<std::size_t>(k)] = a + (b - a) * k / (steps - 1);
  if (steps > 0) v.back() = b;
  return v;
}

std::optional<GroupLabel> parse_group_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto g = parse_group_label(s);
  if (!g) throw Error(ErrorKind::ParseError, "unknown group '" + s + "'");
  return g;
}

InitialSet parse_initial_flag(const std::string& s) {
  auto v = parse_initial_set(s);
  if (!v) throw Error(ErrorKind::ParseError, "unknown initial set '" + s + "'");
  return *v;
}

void warn(std::ostream& err, int not_converged, int skipped) {
  if (not_converged > 0) err << "warning: " << not_converged << " optimizer runs did not converge\n";
  if (skipped > 0) err << "warning: " << skipped << " inputs had zero scattering amplitude and were left out\n";
}

json amplitudes_json(const TwoQubitState& psi) {
  json a = json::array();
  for (const auto& c : psi.amps()) a.push_back({c.real(), c.imag()});
  return a;
}

// --- magic ---------------------------------------------------------------

int cmd_magic(const StateFlags& state, const OptimizerConfig& cfg, std::ostream& out) {
  const TwoQubitState psi = state.resolve();
  const MagicReport r = magic_report(psi);
  const NlResult nl = nonlocal_magic(psi, cfg);
  json j;
  j["state"] = amplitudes_json(psi);
  j["m_lin"] = r.m_lin;
  j["m2"] = r.m2;
  j["xi_purity"] = r.xi_purity;
  j["f_a"] = r.f_a;
  j["e_lin"] = r.e_lin;
  j["m_nl"] = nl.m_nl;
  j["optimizer"] = {{"starts", cfg.starts},
                    {"f_tol", cfg.f_tol},
                    {"x_tol", cfg.x_tol},
                    {"max_evals", cfg.max_evals},
                    {"seed", cfg.seed},
                    {"starts_used", nl.starts_used},
                    {"evaluations", nl.evaluations},
                    {"converged", nl.converged},
                    {"frame", nl.frame.angles}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

// --- sweep nn ------------------------------------------------------------

struct NnSweepFlags {
  std::vector<double> delta_range;
  int steps = 101;
  std::string phase_shifts;
  std::string initial = "tensor";
  std::string group;
  OutputFlags output;
  OptimizerFlags optimizer;
};

int cmd_sweep_nn(const NnSweepFlags& f, unsigned threads, std::ostream& out, std::ostream& err) {
  struct Point {
    std::optional<double> p_lab;
    double d0 = 0.0, d1 = 0.0;
  };
  std::vector<Point> points;
  if (!f.phase_shifts.empty()) {
    for (const auto& r : nn::load_phase_shifts(std::filesystem::path(f.phase_shifts)))
      points.push_back({r.p_lab, r.delta0, r.delta1});
  } else {
    if (f.delta_range.size() != 2) throw Error(ErrorKind::ParseError, "give --delta-range A B or --phase-shifts FILE");
    if (f.steps < 2) throw Error(ErrorKind::ParseError, "--steps must be at least 2");
    for (double d : linspace(f.delta_range[0], f.delta_range[1], f.steps)) points.push_back({std::nullopt, 0.0, d});
  }
  const auto selected = initial_indices(Process::NN, parse_initial_flag(f.initial), parse_group_flag(f.group));
  if (selected.empty()) throw Error(ErrorKind::InvalidArgument, "no stabilizer states match the selection");
  const auto all = initial_indices(Process::NN, InitialSet::All);

  struct Row {
    double m_lin_bar = 0.0;
    EnsembleAverages avg;
  };
  const auto rows = parallel_map(points.size(), threads, [&](std::size_t k) {
    const Evolution ev = nn::evolution(points[k].d0, points[k].d1);
    return Row{average_final_measures(all, ev, f.optimizer.cfg, false).m_lin,
               average_final_measures(selected, ev, f.optimizer.cfg, true)};
  });

  Table t;
  t.header = {"p_lab_MeV", "delta_diff_rad", "m_lin_bar", "m_lin_bbar", "m_nl_bbar", "f_a_bbar", "e_bbar"};
  int not_converged = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& r = rows[k];
    Cell p = std::monostate{};
    if (points[k].p_lab) p = *points[k].p_lab;
    t.rows.push_back({p, points[k].d1 - points[k].d0, r.m_lin_bar, r.avg.m_lin, r.avg.m_nl, r.avg.f_a, r.avg.e_lin});
    not_converged += r.avg.not_converged;
  }
  warn(err, not_converged, 0);
  f.output.emit(t, out);
  return kExitOk;
}

// --- sweep moller ----------------------------------------------------------

struct MollerSweepFlags {
  std::vector<double> theta_range;
  int theta_steps = 181;
  std::string initial = "tensor";
  std::string group;
  bool aggregate = false;
  bool clifford_average = false;
  std::string mode = "sampled";
  std::size_t samples = 5000;
  OutputFlags output;
  OptimizerFlags optimizer;
};

std::vector<moller::ScatteringAngle> theta_grid(const MollerSweepFlags& f) {
  if (f.theta_steps < 2) throw Error(ErrorKind::ParseError, "--theta-steps must be at least 2");
  std::vector<double> raw;
  if (f.theta_range.empty()) {
    // Interior grid; pi/2 is a grid point for odd step counts.
    for (int k = 1; k <= f.theta_steps; ++k) raw.push_back(std::numbers::pi * k / (f.theta_steps + 1));
  } else {
    raw = linspace(f.theta_range[0], f.theta_range[1], f.theta_steps);
  }
  std::vector<moller::ScatteringAngle> out;
  for (double th : raw) out.emplace_back(th);
  return out;
}

TwoQubitState representative_of(Process p, GroupLabel g) {
  for (const auto& [label, st] : representatives(p))
    if (label == g) return st;
  throw Error(ErrorKind::InvalidArgument, "group " + std::string(to_string(g)) + " has no representative state");
}

int cmd_sweep_moller_clifford(const MollerSweepFlags& f, unsigned threads, std::ostream& out) {
  const auto grid = theta_grid(f);
  std::vector<GroupLabel> labels{GroupLabel::G5a, GroupLabel::G5b};
  if (auto g = parse_group_flag(f.group)) labels = {*g};
  std::vector<TwoQubitState> reps;
  for (GroupLabel g : labels) reps.push_back(representative_of(Process::Moller, g));
  const AverageMode mode = f.mode == "exhaustive" ? AverageMode::Exhaustive : AverageMode::Sampled;
  const double c = c_factor(4, 2);

  const std::size_t n = grid.size() * labels.size();
  const auto rows = parallel_map(n, threads, [&](std::size_t task) {
    const TwoQubitState chi = moller::final_state(grid[task / labels.size()], reps[task % labels.size()]);
    const CliffordAverage avg =
        clifford_averaged_antiflatness(chi, mode, f.samples, derive_seed(f.optimizer.cfg.seed, task), 1);
    return std::vector<Cell>{grid[task / labels.size()].value(), std::string(to_string(labels[task % labels.size()])),
                             avg.mean_f, avg.std_err, c * m_lin(chi)};
  });
  Table t;
  t.header = {"theta_rad", "group", "mean_f", "std_err", "c_times_mlin"};
  t.rows = rows;
  f.output.emit(t, out);
  return kExitOk;
}

int cmd_sweep_moller(const MollerSweepFlags& f, unsigned threads, std::ostream& out, std::ostream& err) {
  if (f.clifford_average) return cmd_sweep_moller_clifford(f, threads, out);
  const auto grid = theta_grid(f);
  const auto group = parse_group_flag(f.group);
  const auto selected = initial_indices(Process::Moller, parse_initial_flag(f.initial), group);
  if (selected.empty()) throw Error(ErrorKind::InvalidArgument, "no stabilizer states match the selection");

  // (label name, member indices) per output row at each angle.
  std::vector<std::pair<std::string, std::vector<int>>> buckets;
  if (f.aggregate) {
    buckets.emplace_back(group ? std::string(to_string(*group)) : "all", selected);
  } else {
    for (GroupLabel g : kLabelOrder) {
      std::vector<int> members;
      for (int idx : selected)
        if (group_of(Process::Moller, idx) == g) members.push_back(idx);
      if (!members.empty()) buckets.emplace_back(std::string(to_string(g)), std::move(members));
    }
  }

  const std::size_t n = grid.size() * buckets.size();
  const auto avgs = parallel_map(n, threads, [&](std::size_t task) {
    const auto& members = buckets[task % buckets.size()].second;
    return average_final_measures(members, moller::evolution(grid[task / buckets.size()]), f.optimizer.cfg, true);
  });
  Table t;
  t.header = {"theta_rad", "group", "m_lin", "m_nl", "f_a_times4", "e_lin"};
  int not_converged = 0, skipped = 0;
  for (std::size_t task = 0; task < n; ++task) {
    const auto& a = avgs[task];
    t.rows.push_back({grid[task / buckets.size()].value(), buckets[task % buckets.size()].first, a.m_lin, a.m_nl,
                      4.0 * a.f_a, a.e_lin});
    not_converged += a.not_converged;
    skipped += a.skipped;
  }
  warn(err, not_converged, skipped);
  f.output.emit(t, out);
  return kExitOk;
}

// --- clifford-average, tomo ----------------------------------------------

struct CliffordFlags {
  StateFlags state;
  std::string mode = "sampled";
  std::size_t samples = 5000;
  std::uint64_t seed = 1;
  std::optional<double> theta;
};

int cmd_clifford_average(const CliffordFlags& f, unsigned threads, std::ostream& out) {
  TwoQubitState psi = f.state.resolve();
  if (f.theta) psi = moller::final_state(moller::ScatteringAngle(*f.theta), psi);
  const AverageMode mode = f.mode == "exhaustive" ? AverageMode::Exhaustive : AverageMode::Sampled;
  const CliffordAverage avg = clifford_averaged_antiflatness(psi, mode, f.samples, f.seed, threads);
  const double ml = m_lin(psi);
  json j;
  j["mode"] = f.mode;
  j["samples"] = avg.samples;
  j["seed"] = f.seed;
  j["mean_f"] = avg.mean_f;
  j["std_err"] = avg.std_err;
  j["std_dev"] = avg.std_dev;
  j["m_lin"] = ml;
  j["c_factor"] = c_factor(4, 2);
  j["c_times_mlin"] = c_factor(4, 2) * ml;
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct TomoFlags {
  StateFlags state;
  std::string shots = "exact";
  std::uint64_t seed = 1;
  int resamples = tomo::kBootstrapResamples;
};

int cmd_tomo(const TomoFlags& f, std::ostream& out) {
  std::optional<std::int64_t> shots;
  if (f.shots != "exact") {
    std::int64_t n = 0;
    const auto [ptr, ec] = std::from_chars(f.shots.data(), f.shots.data() + f.shots.size(), n);
    if (ec != std::errc{} || ptr != f.shots.data() + f.shots.size() || n < 1)
      throw Error(ErrorKind::ParseError, "bad --shots value '" + f.shots + "'");
    shots = n;
  }
  const TwoQubitState psi = f.state.resolve();
  const tomo::Estimate e = tomo::estimate_antiflatness(psi, shots, f.seed, f.resamples);
  json j;
  j["estimate"] = e.estimate;
  j["std_err"] = e.std_err;
  j["bloch"] = e.bloch;
  j["projected"] = e.projected;
  j["shots"] = shots ? json(*shots) : json(nullptr);
  j["seed"] = f.seed;
  j["truth"] = anti_flatness(psi);
  out << j.dump(2) << "\n";
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyFlags {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 1;
  std::string mode = "exhaustive";
  std::size_t samples = 5000;
  int points = 25;
  OptimizerFlags optimizer;
  CLI::Option* n_opt = nullptr;
};

int cmd_verify(const VerifyFlags& f, unsigned threads, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  if (f.n_opt->count()) opt.n = f.n;
  opt.seed = f.seed;
  opt.mode = f.mode == "sampled" ? AverageMode::Sampled : AverageMode::Exhaustive;
  opt.samples = f.samples;
  opt.points = f.points;
  opt.optimizer = f.optimizer.cfg;
  opt.threads = threads;
  const VerifyReport rep = run_verify(f.suite, opt);
  out << rep.to_json().dump(2) << "\n";
  if (const Check* c = rep.first_failure()) {
    err << "verify " << f.suite << ": FAIL: " << c->name << " = " << format_double(c->max_deviation) << " > "
        << format_double(c->tolerance) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

// --- atlas ----------------------------------------------------------------

int cmd_stabilizers_list(const OutputFlags& o, std::ostream& out) {
  Table t;
  t.header = {"index", "re0", "im0", "re1", "im1", "re2", "im2", "re3", "im3", "entangled", "nn_group", "moller_group"};
  for (const auto& s : stabilizer_atlas()) {
    std::vector<Cell> row{static_cast<std::int64_t>(s.index)};
    for (const auto& a : s.state.amps()) {
      row.emplace_back(a.real());
      row.emplace_back(a.imag());
    }
    row.emplace_back(s.entangled);
    row.emplace_back(std::string(to_string(group_of(Process::NN, s.index))));
    row.emplace_back(std::string(to_string(group_of(Process::Moller, s.index))));
    t.rows.push_back(std::move(row));
  }
  o.emit(t, out);
  return kExitOk;
}

// Which NN closed form a state follows, from m_lin at a few phase differences.
GroupLabel nn_computed_group(const TwoQubitState& psi) {
  static constexpr std::array<double, 3> kProbe{0.3, 0.7, 1.1};
  for (GroupLabel g : {GroupLabel::G1, GroupLabel::G2, GroupLabel::G3}) {
    bool all = true;
    for (double d : kProbe)
      all = all && std::abs(m_lin(nn::evolution(0.0, d)(psi)) - nn::group_closed_forms(d, g).m_lin) <= 1e-9;
    if (all) return g;
  }
  return GroupLabel::Unassigned;
}

int cmd_groups(Process p, bool audit, const OutputFlags& o, std::ostream& out) {
  Table t;
  t.header = {"index", "group"};
  if (audit) t.header.emplace_back("computed");
  std::vector<moller::AuditRow> rows;
  if (audit && p == Process::Moller) rows = moller::audit_groups();
  for (const auto& s : stabilizer_atlas()) {
    std::vector<Cell> row{static_cast<std::int64_t>(s.index), std::string(to_string(group_of(p, s.index)))};
    if (audit) {
      const GroupLabel computed =
          p == Process::Moller ? rows[static_cast<std::size_t>(s.index - 1)].computed : nn_computed_group(s.state);
      row.emplace_back(std::string(to_string(computed)));
    }
    t.rows.push_back(std::move(row));
  }
  o.emit(t, out);
  return kExitOk;
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
      return kExitIo;
    case ErrorKind::NonMonotonic:
      return kExitNonMonotonic;
    default:
      return kExitUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magic and entanglement measures for two-qubit states and scattering processes", "qmagic"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0: hardware count)")->envname("QMAGIC_THREADS");

  StateFlags magic_state;
  OptimizerFlags magic_opt;
  auto* magic = app.add_subcommand("magic", "magic and entanglement report for one state (JSON)");
  magic_state.attach(magic);
  magic_opt.attach(magic, "--seed");

  auto* sweep = app.add_subcommand("sweep", "figure datasets over a parameter grid");
  sweep->require_subcommand(1);
  NnSweepFlags nnf;
  auto* sweep_nn = sweep->add_subcommand("nn", "nucleon-nucleon sweep over the phase difference");
  sweep_nn->add_option("--delta-range", nnf.delta_range, "Delta delta range in rad: A B")->expected(2);
  sweep_nn->add_option("--steps", nnf.steps, "grid points");
  sweep_nn->add_option("--phase-shifts", nnf.phase_shifts, "CSV of p_lab and phase shifts");
  sweep_nn->add_option("--initial", nnf.initial, "tensor, entangled or all");
  sweep_nn->add_option("--group", nnf.group, "restrict to one group");
  nnf.output.attach(sweep_nn);
  nnf.optimizer.attach(sweep_nn, "--seed");

  MollerSweepFlags mf;
  auto* sweep_moller = sweep->add_subcommand("moller", "Moller sweep over the scattering angle");
  sweep_moller->add_option("--theta-range", mf.theta_range, "theta range in rad: A B")->expected(2);
  sweep_moller->add_option("--theta-steps", mf.theta_steps, "grid points");
  sweep_moller->add_option("--initial", mf.initial, "tensor, entangled or all");
  sweep_moller->add_option("--group", mf.group, "restrict to one group");
  sweep_moller->add_flag("--aggregate", mf.aggregate, "one row per angle, averaged over the selection");
  sweep_moller->add_flag("--clifford-average", mf.clifford_average, "Clifford-averaged anti-flatness variant");
  sweep_moller->add_option("--mode", mf.mode, "sampled or exhaustive")
      ->check(CLI::IsMember({"sampled", "exhaustive"}));
  sweep_moller->add_option("--samples", mf.samples, "Clifford samples per point")->check(CLI::PositiveNumber);
  mf.output.attach(sweep_moller);
  mf.optimizer.attach(sweep_moller, "--seed");

  CliffordFlags cf;
  auto* cliff = app.add_subcommand("clifford-average", "Clifford-averaged anti-flatness (JSON)");
  cf.state.attach(cliff);
  cliff->add_option("--mode", cf.mode, "sampled or exhaustive")->check(CLI::IsMember({"sampled", "exhaustive"}));
  cliff->add_option("--samples", cf.samples, "number of sampled Cliffords")->check(CLI::PositiveNumber);
  cliff->add_option("--seed", cf.seed, "sampling seed");
  cliff->add_option("--theta", cf.theta, "apply Moller scattering at this angle first");

  TomoFlags tf;
  auto* tomo_cmd = app.add_subcommand("tomo", "anti-flatness from simulated spin measurements (JSON)");
  tf.state.attach(tomo_cmd);
  tomo_cmd->add_option("--shots", tf.shots, "shots per axis, or 'exact'");
  tomo_cmd->add_option("--seed", tf.seed, "shot-noise seed");
  tomo_cmd->add_option("--resamples", tf.resamples, "bootstrap resamples")->check(CLI::NonNegativeNumber);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "invariant suites (JSON report)");
  verify->add_option("suite", vf.suite, "four-af, clifford-id, groups-nn or groups-moller")
      ->required()
      ->check(CLI::IsMember(verify_suites()));
  vf.n_opt = verify->add_option("--n", vf.n, "number of random states");
  verify->add_option("--seed", vf.seed, "state seed");
  verify->add_option("--mode", vf.mode, "clifford-id: exhaustive or sampled")
      ->check(CLI::IsMember({"sampled", "exhaustive"}));
  verify->add_option("--samples", vf.samples, "clifford-id sampled draws")->check(CLI::PositiveNumber);
  verify->add_option("--points", vf.points, "grid points for the group suites")->check(CLI::PositiveNumber);
  vf.optimizer.attach(verify, "--opt-seed");

  OutputFlags atlas_out;
  auto* stabs = app.add_subcommand("stabilizers", "stabilizer atlas");
  stabs->require_subcommand(1);
  auto* stabs_list = stabs->add_subcommand("list", "all 60 states as CSV");
  atlas_out.attach(stabs_list);

  OutputFlags groups_out;
  bool audit = false;
  auto* groups = app.add_subcommand("groups", "group assignment per stabilizer state");
  groups->require_subcommand(1);
  auto* groups_nn = groups->add_subcommand("nn", "nucleon-nucleon groups");
  auto* groups_moller = groups->add_subcommand("moller", "Moller groups");
  for (auto* g : {groups_nn, groups_moller}) {
    g->add_flag("--audit", audit, "add the group computed from the closed forms");
    groups_out.attach(g);
  }

  for (auto* sub : {magic, sweep, sweep_nn, sweep_moller, cliff, tomo_cmd, verify, stabs, stabs_list, groups, groups_nn,
                    groups_moller})
    sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*magic) return cmd_magic(magic_state, magic_opt.cfg, out);
    if (*sweep_nn) return cmd_sweep_nn(nnf, threads, out, err);
    if (*sweep_moller) return cmd_sweep_moller(mf, threads, out, err);
    if (*cliff) return cmd_clifford_average(cf, threads, out);
    if (*tomo_cmd) return cmd_tomo(tf, out);
    if (*verify) return cmd_verify(vf, threads, out, err);
    if (*stabs_list) return cmd_stabilizers_list(atlas_out, out);
    if (*groups_nn) return cmd_groups(Process::NN, audit, groups_out, out);
    if (*groups_moller) return cmd_groups(Process::Moller, audit, groups_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace qmagic::cli
