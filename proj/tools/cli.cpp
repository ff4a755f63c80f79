#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isosqueeze/algebra.hpp"
#include "isosqueeze/dist.hpp"
#include "isosqueeze/errors.hpp"
#include "isosqueeze/grid.hpp"
#include "isosqueeze/squeezing.hpp"
#include "isosqueeze/states.hpp"
#include "isosqueeze/stats.hpp"

namespace isosq::cli {

namespace {

using nlohmann::json;
using states::Kind;
using states::SqueezeParams;

constexpr double kTailWarning = 1e-6;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
  std::string command;
  std::string case_name = "i";
  std::optional<double> r;
  std::optional<double> xi;
  std::optional<double> beta_re;
  std::optional<double> beta_im;
  std::optional<double> theta;
  std::optional<double> r_max;
  double s = 0.5;
  int n_max = states::kDefaultNMax;
  int r_steps = squeezing::kDefaultRSteps;
  int theta_steps = squeezing::kDefaultThetaSteps;
  double x_min = -5.0;
  double x_max = 5.0;
  int x_steps = 201;
  double p_min = -4.0;
  double p_max = 4.0;
  int p_steps = 161;
  int phi_steps = 256;
  std::string method = "wavefunction";
  int n_low = kBaseLevel;
  int n_high = 60;
  int terms = 50;
  std::string output;
  Format format = Format::csv;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Kind case_kind(const RunConfig& c) { return c.case_name == "iii" ? Kind::squeezed : Kind::nonlinear; }

// Resolves the (r, theta) or xi parameter group for one state.
SqueezeParams resolve_state(const RunConfig& c, double default_r, double default_theta) {
  SqueezeParams p;
  p.kind = case_kind(c);
  p.n_max = c.n_max;
  p.theta = c.theta.value_or(default_theta);
  if (p.kind == Kind::nonlinear) {
    if (c.xi) throw ValidationError("--xi applies to --case iii only");
    const bool beta = c.beta_re || c.beta_im;
    if (beta && (c.r || c.theta)) throw ValidationError("--beta-re/--beta-im exclude --r/--theta");
    if (beta) {
      const cplx b(c.beta_re.value_or(0.0), c.beta_im.value_or(0.0));
      p.r = std::abs(b);
      p.theta = std::arg(b);
    } else {
      p.r = c.r.value_or(default_r);
    }
  } else {
    if (c.r || c.beta_re || c.beta_im) throw ValidationError("--r/--beta-* apply to --case i only; use --xi");
    p.r = c.xi.value_or(0.0);
  }
  try {
    states::validate(p);
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }
  return p;
}

double resolve_r_max(const RunConfig& c, double nonlinear_default) {
  const Kind kind = case_kind(c);
  const double r_max = c.r_max.value_or(kind == Kind::nonlinear ? nonlinear_default : 0.9);
  if (!(r_max > 0.0)) throw ValidationError("--r-max must be positive");
  if (kind == Kind::squeezed && r_max >= 1.0) throw ValidationError("--r-max must be below 1 for --case iii");
  if (c.xi || c.r || c.beta_re || c.beta_im) throw ValidationError("sweeps take --r-max, not a single parameter");
  return r_max;
}

void require_positive(int v, const char* flag) {
  if (v < 1) throw ValidationError(std::string(flag) + " must be at least 1");
}

json state_meta(const SqueezeParams& p) {
  json m = {{"case", p.kind == Kind::nonlinear ? "i" : "iii"}, {"theta", p.theta}, {"n_max", p.n_max}};
  m[p.kind == Kind::nonlinear ? "r" : "xi"] = p.r;
  if (p.kind == Kind::nonlinear) m["beta"] = {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
  return m;
}

void tail_warning(const FockVector& v, const std::string& where, std::vector<std::string>& warnings) {
  if (v.tail_bound() > kTailWarning) {
    warnings.push_back("tail_mass " + num(v.tail_bound()) + " exceeds 1e-6 at " + where);
  }
}

void write_csv(std::ostream& os, const Table& t, const std::optional<json>& header) {
  if (header) os << "# " << header->dump() << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t, const json& meta, const std::vector<std::string>& warnings) {
  json doc = meta;
  doc["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (double v : row) r.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["warnings"] = warnings;
  os << doc.dump(1) << '\n';
}

struct Sink {
  std::ostream& out;
  std::ostream& err;
  const RunConfig& cfg;

  void emit(const Table& t, json meta, const std::vector<std::string>& warnings, bool csv_header) const {
    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::binary);
      if (!file) throw ValidationError("cannot open output file " + cfg.output);
      os = &file;
    }
    if (cfg.format == Format::json) {
      write_json(*os, t, meta, warnings);
      return;
    }
    std::optional<json> header;
    if (csv_header) {
      meta["warnings"] = warnings;
      header = meta;
    }
    write_csv(*os, t, header);
    if (!warnings.empty()) err << json{{"warnings", warnings}}.dump() << '\n';
  }

  void emit_json(const json& doc) const {
    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::binary);
      if (!file) throw ValidationError("cannot open output file " + cfg.output);
      os = &file;
    }
    *os << doc.dump(1) << '\n';
  }
};

void cmd_state(const RunConfig& c, const Sink& sink) {
  const auto p = resolve_state(c, 0.0, 0.0);
  const auto v = states::build_state(p);
  std::vector<std::string> warnings;
  tail_warning(v, "state", warnings);
  Table t{{"level", "re", "im", "prob"}, {}};
  for (const auto& [level, prob] : stats::photon_distribution(v)) {
    if (prob == 0.0) continue;
    const cplx a = v.amp(level);
    t.rows.push_back({static_cast<double>(level), a.real(), a.imag(), prob});
  }
  json meta = {{"command", "state"}, {"params", state_meta(p)}, {"n_max_used", states::effective_n_max(p)},
               {"tail_bound", v.tail_bound()}};
  sink.emit(t, meta, warnings, false);
}

void cmd_stats(const RunConfig& c, const Sink& sink) {
  const double r_max = resolve_r_max(c, 31.0);
  require_positive(c.r_steps, "--r-steps");
  const Kind kind = case_kind(c);
  const double theta = c.theta.value_or(0.0);
  std::vector<std::string> warnings;
  Table t{{"r", "meanK0", "Q", "g2", "A3"}, {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double r : radial_grid(r_max, c.r_steps)) {
    const SqueezeParams p{kind, r, theta, c.n_max};
    const auto v = states::build_state(p);
    tail_warning(v, "r=" + num(r), warnings);
    const auto m = stats::moment_table(v);
    if (!m.A3) warnings.push_back("A3 undefined at r=" + num(r));
    t.rows.push_back({r, m.mean_K0, m.Q.value_or(nan), m.g2.value_or(nan), m.A3.value_or(nan)});
  }
  json meta = {{"command", "stats"},
               {"case", c.case_name},
               {"theta", theta},
               {"n_max", c.n_max},
               {"grid", {{"r_max", r_max}, {"r_steps", c.r_steps}}}};
  sink.emit(t, meta, warnings, false);
}

void cmd_squeeze(const RunConfig& c, const Sink& sink) {
  const double r_max = resolve_r_max(c, 5.0);
  if (c.theta) throw ValidationError("squeeze sweeps theta; use --theta-steps");
  require_positive(c.r_steps, "--r-steps");
  require_positive(c.theta_steps, "--theta-steps");
  const auto rs = radial_grid(r_max, c.r_steps);
  const auto ths = phase_grid(c.theta_steps);
  std::vector<std::string> warnings;
  Table t{{"r", "theta", "I1", "I2", "I3", "I4"}, {}};
  for (const auto& q : squeezing::sweep(case_kind(c), rs, ths, c.n_max)) {
    if (!q.uncertainty_ok) warnings.push_back("uncertainty bound violated at r=" + num(q.r) + " theta=" + num(q.theta));
    t.rows.push_back({q.r, q.theta, q.I1, q.I2, q.I3, q.I4});
  }
  json meta = {{"command", "squeeze"},
               {"case", c.case_name},
               {"n_max", c.n_max},
               {"grid", {{"r_max", r_max}, {"r_steps", c.r_steps}, {"theta_steps", c.theta_steps}}}};
  sink.emit(t, meta, warnings, false);
}

void cmd_quad_dist(const RunConfig& c, const Sink& sink) {
  const auto p = resolve_state(c, 10.0, 0.5);
  require_positive(c.x_steps, "--x-steps");
  require_positive(c.phi_steps, "--phi-steps");
  if (c.method != "wavefunction" && c.method != "closed") throw ValidationError("--method is wavefunction|closed");
  if (c.method == "closed" && p.kind != Kind::nonlinear) throw ValidationError("--method closed needs --case i");
  const auto xs = linspace(c.x_min, c.x_max, c.x_steps);
  const auto phis = phase_grid(c.phi_steps);
  const auto v = states::build_state(p);
  std::vector<std::string> warnings;
  tail_warning(v, "state", warnings);
  const auto g = c.method == "closed" ? dist::quadrature_distribution_closed(p, xs, phis)
                                      : dist::quadrature_grid(v, xs, phis);
  Table t{{"x", "phi", "P"}, {}};
  t.rows.reserve(g.values.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < phis.size(); ++j) t.rows.push_back({xs[i], phis[j], g.at(i, j)});
  }
  json meta = {{"command", "quad-dist"},
               {"params", state_meta(p)},
               {"method", c.method},
               {"grid",
                {{"x_min", c.x_min}, {"x_max", c.x_max}, {"x_steps", c.x_steps}, {"phi_steps", c.phi_steps}}}};
  sink.emit(t, meta, warnings, true);
}

void cmd_quasiprob(const RunConfig& c, const Sink& sink) {
  const auto p = resolve_state(c, 2.0 * std::numbers::sqrt2, std::numbers::pi / 4.0);
  if (!(c.s < 1.0)) throw ValidationError("--s must be below 1");
  require_positive(c.x_steps, "--x-steps");
  require_positive(c.p_steps, "--p-steps");
  const auto xs = linspace(c.x_min, c.x_max, c.x_steps);
  const auto ps = linspace(c.p_min, c.p_max, c.p_steps);
  const auto v = states::build_state(p);
  std::vector<std::string> warnings;
  tail_warning(v, "state", warnings);
  const auto g = dist::quasi_probability_grid(v, xs, ps, c.s);
  Table t{{"x", "p", "F"}, {}};
  t.rows.reserve(g.values.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) t.rows.push_back({xs[i], ps[j], g.at(i, j)});
  }
  json meta = {{"command", "quasiprob"},
               {"s", c.s},
               {"params", state_meta(p)},
               {"grid",
                {{"x_min", c.x_min},
                 {"x_max", c.x_max},
                 {"x_steps", c.x_steps},
                 {"p_min", c.p_min},
                 {"p_max", c.p_max},
                 {"p_steps", c.p_steps}}}};
  sink.emit(t, meta, warnings, true);
}

void cmd_verify_algebra(const RunConfig& c, const Sink& sink) {
  if (c.n_low < kBaseLevel) throw ValidationError("--n-low must be at least 3");
  if (c.n_high < c.n_low + 2) throw ValidationError("--n-high must be at least --n-low + 2");
  auto doc = algebra::to_json(algebra::verify_commutators(c.n_low, c.n_high));
  json freq = json::array();
  for (int n = c.n_low; n <= c.n_high; ++n) {
    const double diff = algebra::vibration_frequency(n, algebra::Branch::plus) -
                        (algebra::deformed_energy(n + 1) - algebra::deformed_energy(n));
    freq.push_back({{"n", n}, {"omega_plus_minus_energy_gap", diff}});
  }
  doc["frequency_consistency"] = std::move(freq);
  doc["command"] = "verify-algebra";
  sink.emit_json(doc);
}

void cmd_dual_check(const RunConfig& c, const Sink& sink) {
  if (c.terms < 2) throw ValidationError("--terms must be at least 2");
  auto doc = states::to_json(states::dual_series_diagnosis(c.terms));
  doc["command"] = "dual-check";
  sink.emit_json(doc);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Nonlinear squeezed states of the generalized isotonic oscillator"};
  app.require_subcommand(1, 1);

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "csv|json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  const auto add_case = [&](CLI::App* sub) {
    sub->add_option("--case", cfg.case_name, "i (nonlinear squeezed) or iii (squeezed)")
        ->check(CLI::IsMember({"i", "iii"}));
    sub->add_option("--n-max", cfg.n_max, "Half-index truncation (top level 2*n_max+3)")
        ->envname("ISOSQ_N_MAX");
  };
  const auto add_state = [&](CLI::App* sub) {
    add_case(sub);
    sub->add_option("--r", cfg.r, "|beta| for --case i");
    sub->add_option("--theta", cfg.theta, "Phase of beta or xi (radians)");
    sub->add_option("--xi", cfg.xi, "|xi| for --case iii");
    sub->add_option("--beta-re", cfg.beta_re, "Re beta for --case i");
    sub->add_option("--beta-im", cfg.beta_im, "Im beta for --case i");
  };
  const auto add_sweep = [&](CLI::App* sub) {
    add_case(sub);
    sub->add_option("--r-max", cfg.r_max, "Largest modulus of the sweep (0, r_max]");
    sub->add_option("--r-steps", cfg.r_steps, "Sweep points")->envname("ISOSQ_R_STEPS");
    // Rejected at validation when a sweep receives a single-state parameter.
    sub->add_option("--r", cfg.r)->group("");
    sub->add_option("--xi", cfg.xi)->group("");
  };

  auto* state = app.add_subcommand("state", "Amplitude table of one state (CSV: level,re,im,prob)");
  add_state(state);
  add_common(state);

  auto* stats_cmd = app.add_subcommand("stats", "Sweep r: meanK0, Q, g2, A3");
  add_sweep(stats_cmd);
  stats_cmd->add_option("--theta", cfg.theta, "Phase (radians)");
  add_common(stats_cmd);

  auto* squeeze = app.add_subcommand("squeeze", "Sweep (r, theta): I1..I4");
  add_sweep(squeeze);
  squeeze->add_option("--theta-steps", cfg.theta_steps, "Phase points on [0, 2pi)")->envname("ISOSQ_THETA_STEPS");
  squeeze->add_option("--theta", cfg.theta)->group("");
  add_common(squeeze);

  auto* quad = app.add_subcommand("quad-dist", "Quadrature distribution P(x, phi)");
  add_state(quad);
  quad->add_option("--x-min", cfg.x_min);
  quad->add_option("--x-max", cfg.x_max);
  quad->add_option("--x-steps", cfg.x_steps)->envname("ISOSQ_X_STEPS");
  quad->add_option("--phi-steps", cfg.phi_steps)->envname("ISOSQ_PHI_STEPS");
  quad->add_option("--method", cfg.method, "wavefunction|closed");
  add_common(quad);

  auto* quasi = app.add_subcommand("quasiprob", "s-parameterized quasi-probability F(x + i p, s)");
  add_state(quasi);
  quasi->add_option("--s", cfg.s, "Ordering parameter, s < 1");
  quasi->add_option("--x-min", cfg.x_min);
  quasi->add_option("--x-max", cfg.x_max);
  quasi->add_option("--x-steps", cfg.x_steps)->envname("ISOSQ_X_STEPS");
  quasi->add_option("--p-min", cfg.p_min);
  quasi->add_option("--p-max", cfg.p_max);
  quasi->add_option("--p-steps", cfg.p_steps)->envname("ISOSQ_P_STEPS");
  add_common(quasi);

  auto* verify = app.add_subcommand("verify-algebra", "Commutator, Casimir and frequency checks (JSON)");
  verify->add_option("--n-low", cfg.n_low);
  verify->add_option("--n-high", cfg.n_high);
  verify->add_option("-o,--output", cfg.output);

  auto* dual = app.add_subcommand("dual-check", "Convergence diagnosis of the dual-state series (JSON)");
  dual->add_option("--terms", cfg.terms);
  dual->add_option("-o,--output", cfg.output);

  // quasiprob grids default to the square [-4, 4]^2 at 161 points.
  quasi->preparse_callback([&](std::size_t) {
    cfg.x_min = -4.0;
    cfg.x_max = 4.0;
    cfg.x_steps = 161;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Sink sink{out, err, cfg};
  try {
    if (state->parsed()) {
      cmd_state(cfg, sink);
    } else if (stats_cmd->parsed()) {
      cmd_stats(cfg, sink);
    } else if (squeeze->parsed()) {
      cmd_squeeze(cfg, sink);
    } else if (quad->parsed()) {
      cmd_quad_dist(cfg, sink);
    } else if (quasi->parsed()) {
      cmd_quasiprob(cfg, sink);
    } else if (verify->parsed()) {
      cmd_verify_algebra(cfg, sink);
    } else if (dual->parsed()) {
      cmd_dual_check(cfg, sink);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace isosq::cli
