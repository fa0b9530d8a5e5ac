// Copyright 2026 The jcqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "jcq/error_metrics.hpp"
#include "jcq/fock_field.hpp"
#include "jcq/jc_channel.hpp"
#include "jcq/pulse_sequence.hpp"
#include "serialize.hpp"
#include "table.hpp"

namespace jcq::cli {

namespace {

constexpr double kPi = std::numbers::pi;
// Moment columns weight the truncated tail by x^k, so they get a much
// tighter default window than the channel commands.
constexpr double kMomentTailTol = 1e-20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  double tail_tol = kDefaultTailTol;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string out_path;
};

// Output of a successful command, before rendering.
struct Result {
  Table table;
  Json params = Json::object();
  // Replaces the table-based JSON document when set (kraus-dump).
  std::function<Json(const Json& meta)> json_override;
};

const std::map<std::string, PulseMode> kModeNames = {
    {"quarter-pi", PulseMode::QuarterPi},
    {"optimal", PulseMode::OptimalFidelity},
    {"optimal-fidelity", PulseMode::OptimalFidelity},
    {"bias-free", PulseMode::BiasFree},
    {"explicit", PulseMode::Explicit},
};

std::string mode_name(PulseMode m) {
  switch (m) {
    case PulseMode::QuarterPi: return "quarter-pi";
    case PulseMode::OptimalFidelity: return "optimal";
    case PulseMode::BiasFree: return "bias-free";
    case PulseMode::Explicit: return "explicit";
  }
  return "?";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_mean(double n, const std::string& flag) {
  require(std::isfinite(n) && n > 0.0, flag + " must be a positive number");
}

// --- sweep -----------------------------------------------------------------

struct SweepOptions {
  double n_min = 10.0;
  double n_max = 1e4;
  int points = 13;
  std::string spacing = "log";
  double theta0 = 0.0;  // units of pi
  double theta = 0.25;
  PulseMode mode = PulseMode::QuarterPi;
  double vartheta = std::numeric_limits<double>::quiet_NaN();
};

std::vector<double> sweep_grid(const SweepOptions& o) {
  std::vector<double> grid;
  const int last = o.points - 1;
  for (int i = 0; i <= last; ++i) {
    const double t = static_cast<double>(i) / last;
    double n = o.spacing == "log"
                   ? o.n_min * std::pow(o.n_max / o.n_min, t)
                   : o.n_min + (o.n_max - o.n_min) * t;
    if (i == 0) n = o.n_min;
    if (i == last) n = o.n_max;
    grid.push_back(n);
  }
  return grid;
}

Result cmd_sweep(const SweepOptions& o, const GlobalOptions& g) {
  require_mean(o.n_min, "--n-min");
  require_mean(o.n_max, "--n-max");
  require(o.n_min <= o.n_max, "--n-min must not exceed --n-max");
  require(o.points >= 2, "--points must be at least 2");
  require(o.spacing == "log" || o.spacing == "linear",
          "--spacing must be log or linear");

  const ControlSpec spec{o.theta0 * kPi, o.theta * kPi};
  Result r;
  r.table.columns = {"N",           "P_exact", "P_asymptotic", "gea_banacloche",
                     "ozawa_bound", "delta",   "vartheta_used"};
  for (double n : sweep_grid(o)) {
    const ErrorReport e =
        evaluate_control(spec, n, o.mode, g.tail_tol, o.vartheta * kPi);
    r.table.add_row({n, e.exact, e.asymptotic, e.gea_banacloche,
                     e.ozawa_bound, e.delta, e.vartheta_used});
  }
  r.params = {{"n_min", o.n_min},   {"n_max", o.n_max},
              {"points", o.points}, {"spacing", o.spacing},
              {"theta0", o.theta0}, {"theta", o.theta},
              {"mode", mode_name(o.mode)}};
  return r;
}

// --- table2 ----------------------------------------------------------------

Result cmd_table2(double n, const GlobalOptions& g) {
  require(std::isfinite(n) && n >= 100.0, "--n must be at least 100");
  const double m2 = (kPi - 2) * (kPi - 2);
  const double p2 = (kPi + 2) * (kPi + 2);
  struct Cell {
    double theta0, theta, coefficient;
  };
  const Cell cells[] = {
      {0.0, kPi / 4, m2 / 64},          {kPi / 4, kPi / 4, p2 / 64},
      {kPi / 2, kPi / 4, p2 / 64},      {3 * kPi / 4, kPi / 4, m2 / 64},
      {0.0, kPi / 2, kPi * kPi / 16},   {kPi / 4, kPi / 2, p2 / 16},
      {kPi / 2, kPi / 2, kPi * kPi / 16}, {3 * kPi / 4, kPi / 2, m2 / 16},
  };
  Result r;
  r.table.columns = {"theta0", "theta", "N_times_P_exact", "asymptotic_coefficient",
                     "relative_deviation"};
  for (const Cell& c : cells) {
    const double np = n * evaluate_control({c.theta0, c.theta}, n,
                                           PulseMode::QuarterPi, g.tail_tol)
                              .exact;
    r.table.add_row({c.theta0, c.theta, np, c.coefficient,
                     std::abs(np - c.coefficient) / c.coefficient});
  }
  r.params = {{"N", n}};
  return r;
}

// --- sequence --------------------------------------------------------------

const std::map<std::string, double> kStartAngles = {
    {"ground", 0.0},
    {"excited", kPi / 2},
    {"plus", kPi / 4},
    {"threequarter", 3 * kPi / 4},
};

struct SequenceOptions {
  std::string start = "ground";
  double n = 1e4;
  PulseMode mode = PulseMode::BiasFree;
  int steps = 2;
  double theta = 0.25;  // per step, units of pi
  double vartheta = std::numeric_limits<double>::quiet_NaN();
};

Result cmd_sequence(const SequenceOptions& o, const GlobalOptions& g) {
  require_mean(o.n, "--n");
  require(o.steps >= 1, "--steps must be at least 1");
  const double theta0 = kStartAngles.at(o.start);
  const double theta = o.theta * kPi;

  auto steps =
      uniform_steps(static_cast<std::size_t>(o.steps), theta, o.n, o.mode);
  for (auto& s : steps) s.explicit_vartheta = o.vartheta * kPi;
  const SequenceReport rep = run_sequence(theta0, steps, g.tail_tol);

  Result r;
  r.table.columns = {"step",       "target_angle", "P_exact", "P_mixture",
                     "P_asymptote", "single_N",    "single_2N"};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ControlSpec single{theta0, theta * static_cast<double>(i + 1)};
    const double single_n =
        evaluate_control(single, o.n, PulseMode::QuarterPi, g.tail_tol).exact;
    const double single_2n =
        evaluate_control(single, 2 * o.n, PulseMode::QuarterPi, g.tail_tol)
            .exact;
    r.table.add_row({static_cast<double>(i + 1), rep.target_angle[i],
                     rep.per_step_error[i], rep.per_step_mixture[i],
                     rep.per_step_asymptote[i], single_n, single_2n});
  }
  r.params = {{"start", o.start}, {"N", o.n},         {"mode", mode_name(o.mode)},
              {"steps", o.steps}, {"theta", o.theta}};
  return r;
}

// --- landscape -------------------------------------------------------------

Result cmd_landscape(double theta_pi, double n, int grid,
                     const GlobalOptions& g) {
  require_mean(n, "--n");
  require(grid >= 2, "--grid must be at least 2");
  require(std::isfinite(theta_pi) && theta_pi >= 0.0 && theta_pi <= 1.0,
          "--theta must lie in [0, 1] (units of pi)");
  const double theta = theta_pi * kPi;

  Result r;
  r.table.columns = {"Phi", "theta0", "N_times_P_exact",
                     "N_times_P_asymptote"};
  double best = -1.0, worst = std::numeric_limits<double>::infinity();
  double argmax = 0.0, argmin = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double phi = 0.5 * kPi * j / (grid - 1);
    const ControlSpec spec = ControlSpec::from_midpoint(phi, theta);
    const double exact =
        n * evaluate_control(spec, n, PulseMode::QuarterPi, g.tail_tol).exact;
    const double asym = n * landscape_asymptote(phi, theta, n);
    r.table.add_row({phi, spec.theta0, exact, asym});
    if (exact > best) best = exact, argmax = phi;
    if (exact < worst) worst = exact, argmin = phi;
  }
  r.table.summary = {{"argmax_Phi", argmax}, {"argmin_Phi", argmin}};
  r.params = {{"theta", theta_pi}, {"N", n}, {"grid", grid}};
  return r;
}

// --- moments ---------------------------------------------------------------

Result cmd_moments(double n, int k, double tail_tol) {
  require_mean(n, "--n");
  require(k >= 0, "--k must be non-negative");
  const FieldState field = make_coherent(n, kRotationPhase, tail_tol);
  const MomentVector direct = central_moments_direct(field, k);
  const MomentVector recursive = central_moments_recursive(n, k);
  Result r;
  r.table.columns = {"k", "mu_direct", "mu_recursive", "bound_1_over_N"};
  for (int i = 0; i <= k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    r.table.add_row(
        {static_cast<double>(i), direct[idx], recursive[idx], 1.0 / n});
  }
  r.params = {{"N", n}, {"K", k}, {"tail_tol", tail_tol}};
  return r;
}

// --- kraus-dump ------------------------------------------------------------

struct DumpOptions {
  double n = 100.0;
  double vartheta = 0.25;  // units of pi
  double phase = 0.5;      // units of pi
  double kappa = std::numeric_limits<double>::quiet_NaN();
  long number = -1;
};

Result cmd_kraus_dump(const DumpOptions& o, const GlobalOptions& g) {
  const bool fock = o.number >= 0;
  const FieldState field =
      fock ? make_number_state(static_cast<std::size_t>(o.number))
           : (require_mean(o.n, "--n"),
              make_coherent(o.n, o.phase * kPi, g.tail_tol));
  const double mean = field.mean_photon_number();
  PulseSpec pulse;
  if (std::isfinite(o.kappa)) {
    pulse = PulseSpec::from_kappa(o.kappa, mean);
  } else {
    require(mean > 0.0, "vacuum field needs --kappa instead of --vartheta");
    pulse = PulseSpec::from_vartheta(o.vartheta * kPi, mean);
  }
  const KrausSet kraus = build_kraus(field, pulse);
  const double residual = kraus.completeness_residual();

  Result r;
  r.table.columns = {"n",      "m00_re", "m00_im", "m01_re", "m01_im",
                     "m10_re", "m10_im", "m11_re", "m11_im"};
  for (std::size_t idx = kraus.first_index(); idx <= kraus.last_index();
       ++idx) {
    const Matrix2c& m = kraus.op(idx);
    r.table.add_row({static_cast<double>(idx), m(0, 0).real(),
                     m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(),
                     m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(),
                     m(1, 1).imag()});
  }
  r.table.summary = {{"completeness_residual", residual},
                     {"kappa", pulse.kappa},
                     {"vartheta", pulse.vartheta}};
  r.params = {{"N", mean},
              {"field", fock ? "number" : "coherent"},
              {"phase", o.phase},
              {"kappa", pulse.kappa}};
  r.json_override = [field, kraus, residual](const Json& meta) {
    return Json{{"meta", meta},
                {"field", field_to_json(field)},
                {"rows", kraus_to_json(kraus)},
                {"completeness_residual", residual}};
  };
  return r;
}

std::string render(const Result& r, const std::string& command,
                   const GlobalOptions& g) {
  if (g.format == "csv") return render_csv(r.table);
  Json params = r.params;
  params["tail_tol"] = params.contains("tail_tol") ? params["tail_tol"]
                                                   : Json(g.tail_tol);
  params["seed"] = g.seed;
  Json doc = render_json(r.table, command, params);
  if (r.json_override) doc = r.json_override(doc["meta"]);
  return doc.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"jcq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Qubit control error with a quantized coherent field"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--tail-tol", g.tail_tol,
                 "Discarded Poisson mass allowed per field (default 1e-12; "
                 "moments defaults to 1e-20)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed,
                 "Reserved; the model is deterministic");
  app.add_option("--out", g.out_path, "Write output to FILE");

  const auto mode_check = CLI::CheckedTransformer(kModeNames, CLI::ignore_case);

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Error rates over a range of N");
  sweep_cmd->add_option("--n-min", sweep.n_min, "Smallest N");
  sweep_cmd->add_option("--n-max", sweep.n_max, "Largest N");
  sweep_cmd->add_option("--points", sweep.points, "Number of N values");
  sweep_cmd->add_option("--spacing", sweep.spacing, "log or linear");
  sweep_cmd->add_option("--theta0", sweep.theta0, "Initial altitude / pi");
  sweep_cmd->add_option("--theta", sweep.theta, "Intended rotation / pi");
  sweep_cmd->add_option("--mode", sweep.mode, "Pulse area rule")
      ->transform(mode_check);
  sweep_cmd->add_option("--vartheta", sweep.vartheta,
                        "Half pulse area / pi (explicit mode)");

  double table2_n = 1e4;
  auto* table2_cmd =
      app.add_subcommand("table2", "pi/2 and pi pulse error coefficients");
  table2_cmd->add_option("--n", table2_n, "Mean photon number");

  SequenceOptions seq;
  auto* seq_cmd =
      app.add_subcommand("sequence", "Successive pulses with fresh fields");
  seq_cmd->add_option("--start", seq.start, "Initial qubit state")
      ->check(CLI::IsMember({"ground", "excited", "plus", "threequarter"}));
  seq_cmd->add_option("--n", seq.n, "Mean photon number per pulse");
  seq_cmd->add_option("--mode", seq.mode, "Pulse area rule")
      ->transform(mode_check);
  seq_cmd->add_option("--steps", seq.steps, "Number of pulses");
  seq_cmd->add_option("--theta", seq.theta, "Rotation per pulse / pi");
  seq_cmd->add_option("--vartheta", seq.vartheta,
                      "Half pulse area / pi (explicit mode)");

  double land_theta = 0.5, land_n = 1e4;
  int land_grid = 9;
  auto* land_cmd = app.add_subcommand(
      "landscape", "Error versus rotation midpoint altitude");
  land_cmd->add_option("--theta", land_theta, "Rotation / pi, in [0, 1]");
  land_cmd->add_option("--n", land_n, "Mean photon number");
  land_cmd->add_option("--grid", land_grid, "Points over Phi in [0, pi/2]");

  double mom_n = 10.0;
  int mom_k = 6;
  auto* mom_cmd =
      app.add_subcommand("moments", "Central moments of n/N, two ways");
  mom_cmd->add_option("--n", mom_n, "Mean photon number");
  mom_cmd->add_option("--k", mom_k, "Highest moment order");

  DumpOptions dump;
  auto* dump_cmd =
      app.add_subcommand("kraus-dump", "Kraus operators of one pulse");
  dump_cmd->add_option("--n", dump.n, "Mean photon number (coherent)");
  dump_cmd->add_option("--vartheta", dump.vartheta, "Half pulse area / pi");
  dump_cmd->add_option("--phase", dump.phase, "Coherent phase / pi");
  dump_cmd->add_option("--kappa", dump.kappa, "Coupling-time product g t");
  dump_cmd->add_option("--number", dump.number,
                       "Use the Fock state |m> instead of a coherent field")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "jcq: " << e.what() << '\n';
    return 2;
  }

  std::string text;
  try {
    require(std::isfinite(g.tail_tol) && g.tail_tol > 0.0 && g.tail_tol < 1.0,
            "--tail-tol must lie in (0, 1)");
    Result result;
    std::string name;
    if (sweep_cmd->parsed()) {
      name = "sweep";
      result = cmd_sweep(sweep, g);
    } else if (table2_cmd->parsed()) {
      name = "table2";
      result = cmd_table2(table2_n, g);
    } else if (seq_cmd->parsed()) {
      name = "sequence";
      result = cmd_sequence(seq, g);
    } else if (land_cmd->parsed()) {
      name = "landscape";
      result = cmd_landscape(land_theta, land_n, land_grid, g);
    } else if (mom_cmd->parsed()) {
      name = "moments";
      const double tol = app.count("--tail-tol") ? g.tail_tol : kMomentTailTol;
      result = cmd_moments(mom_n, mom_k, tol);
    } else {
      name = "kraus-dump";
      result = cmd_kraus_dump(dump, g);
    }
    text = render(result, name, g);
  } catch (const std::exception& e) {
    // Library precondition failures are validation errors from the CLI's
    // point of view.
    err << "jcq: " << e.what() << '\n';
    return 2;
  }

  if (g.out_path.empty()) {
    out << text;
    out.flush();
    return 0;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) {
    err << "jcq: cannot open " << g.out_path << " for writing\n";
    return 2;
  }
  file << text;
  return 0;
}

}  // namespace jcq::cli
