#include "symcirc/cli.hpp"

#include "symcirc/circuit.hpp"
#include "symcirc/gue.hpp"
#include "symcirc/haar.hpp"
#include "symcirc/kernels.hpp"
#include "symcirc/repro.hpp"
#include "symcirc/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace symcirc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json rational_json(const Rational& r) { return Json{{"exact", to_string(r)}, {"decimal", to_double(r)}}; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

struct Common {
  std::optional<std::uint64_t> seed;
  int threads = 0;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("SYMCIRC_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || std::string(env).front() == '-') throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string("SYMCIRC_SEED is not an unsigned integer: ") + env);
      }
    }
    return 1;
  }
  int resolved_threads() const {
    if (threads < 0) throw std::invalid_argument("--threads must be non-negative");
    if (threads > 0) return threads;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Master seed (falls back to SYMCIRC_SEED, then 1)");
  app->add_option("--threads", c.threads, "Worker threads (0 = hardware count)");
}

class Manifest {
 public:
  Manifest(std::string subcommand, Json config, std::uint64_t seed, int threads)
      : start_(std::chrono::steady_clock::now()) {
    body_["subcommand"] = std::move(subcommand);
    body_["config"] = std::move(config);
    body_["seed"] = seed;
    body_["version"] = kVersion;
    body_["threads"] = threads;
  }
  void output(const std::string& path) { outputs_.push_back(path); }
  Json& extra() { return extra_; }
  void write(const std::string& path) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    body_["duration_seconds"] = dt.count();
    body_["outputs"] = outputs_;
    if (!extra_.is_null()) body_["summary"] = extra_;
    write_text(path, body_.dump(2) + "\n");
  }

 private:
  std::chrono::steady_clock::time_point start_;
  Json body_;
  Json outputs_ = Json::array();
  Json extra_;
};

SiteOp parse_initial_op(const std::string& s) {
  if (s.size() == 1) {
    const SiteOp op = parse_site_op(s);
    if (op != SiteOp::I) return op;
  }
  throw std::invalid_argument("initial operator must be X, Y or Z");
}

Json edge_fit_json(const EdgeFit& f) {
  return Json{{"v_B_hat", f.v},
              {"v_B_stderr", f.v_stderr},
              {"D_hat", f.D},
              {"D_stderr", f.D_stderr},
              {"mean_intercept", f.mean_intercept},
              {"var_intercept", f.var_intercept},
              {"v_B_ols_stderr", f.v_ols_stderr},
              {"D_ols_stderr", f.D_ols_stderr},
              {"r2_mean", f.r2_mean},
              {"r2_var", f.r2_var}};
}

// ---- simulate ----

struct SimulateArgs {
  Common common;
  std::string cls = "unitary";
  int sites = 304;
  int layers = 150;
  int ensemble = 2000;
  std::string initial_op = "X";
  std::optional<int> initial_site;
  int burn_in = 20;
  std::optional<int> fit_lo;
  std::optional<int> fit_hi;
  std::string out = "symcirc";
};

void setup_simulate(CLI::App& root, SimulateArgs& a) {
  auto* app = root.add_subcommand("simulate", "Monte Carlo ensemble of Pauli-string trajectories");
  app->add_option("--class", a.cls, "Gate symmetry class")->capture_default_str();
  app->add_option("--sites", a.sites, "Chain length")->capture_default_str();
  app->add_option("--layers", a.layers, "Number of brickwork layers")->capture_default_str();
  app->add_option("--ensemble", a.ensemble, "Number of trajectories")->capture_default_str();
  app->add_option("--initial-op", a.initial_op, "Initial single-site operator (X, Y or Z)")->capture_default_str();
  app->add_option("--initial-site", a.initial_site, "Initial site (default: centre)");
  app->add_option("--burn-in", a.burn_in, "Layers skipped before fitting")->capture_default_str();
  app->add_option("--fit-lo", a.fit_lo, "First layer of the fit window (default: burn-in)");
  app->add_option("--fit-hi", a.fit_hi, "Last layer of the fit window (default: layers)");
  app->add_option("--out", a.out, "Output prefix")->capture_default_str();
  add_common(app, a.common);
}

int do_simulate(const SimulateArgs& a, std::ostream& out) {
  SimConfig cfg;
  cfg.cls = parse_class(a.cls);
  cfg.sites = a.sites;
  cfg.layers = a.layers;
  cfg.ensemble = a.ensemble;
  cfg.seed = a.common.resolved_seed();
  cfg.initial_site = a.initial_site;
  cfg.initial_op = parse_initial_op(a.initial_op);
  cfg.burn_in = a.burn_in;
  if (a.fit_lo || a.fit_hi) cfg.fit_window = FitWindow{a.fit_lo.value_or(a.burn_in), a.fit_hi.value_or(a.layers)};
  cfg.validate();
  const int threads = a.common.resolved_threads();

  Json config{{"class", std::string(name(cfg.cls))},
              {"sites", cfg.sites},
              {"layers", cfg.layers},
              {"ensemble", cfg.ensemble},
              {"initial_op", a.initial_op},
              {"initial_site", cfg.start_site()},
              {"burn_in", cfg.burn_in},
              {"fit_window", {cfg.window().lo, cfg.window().hi}},
              {"out", a.out}};
  Manifest manifest("simulate", config, cfg.seed, threads);

  const EnsembleStats stats = run_ensemble(cfg, threads);
  const FrontFit fit = fit_front(stats, cfg.window());

  std::string edges = "t,mean_R,var_R,mean_L,var_L\n";
  for (int t = 0; t <= cfg.layers; ++t)
    edges += std::to_string(t) + "," + fmt17(stats.mean(Edge::Right, t)) + "," + fmt17(stats.variance(Edge::Right, t)) +
             "," + fmt17(stats.mean(Edge::Left, t)) + "," + fmt17(stats.variance(Edge::Left, t)) + "\n";

  std::string rho = "t,x,rho_R,rho_L\n";
  const int c = cfg.start_site();
  for (int t = 0; t <= cfg.layers; ++t)
    for (int x = std::max(0, c - t - 2); x <= std::min(cfg.sites - 1, c + t + 2); ++x)
      rho += std::to_string(t) + "," + std::to_string(x) + "," + fmt17(stats.rho(Edge::Right, t, x)) + "," +
             fmt17(stats.rho(Edge::Left, t, x)) + "\n";

  const ProfileReport prof = front_profile_check(stats, fit, fit.window.hi, Edge::Right);
  const ClassTheory th = class_theory(cfg.cls, 2);
  Json theory{{"v_B", rational_json(th.v_closed)}};
  if (th.walk) theory["D"] = rational_json(th.walk->D);
  if (th.exact) theory["D_exact"] = rational_json(th.exact->D);

  Json fj{{"class", std::string(name(cfg.cls))},
          {"seed", cfg.seed},
          {"v_B_hat", fit.v},
          {"v_B_stderr", fit.v_stderr},
          {"D_hat", fit.D},
          {"D_stderr", fit.D_stderr},
          {"window", {fit.window.lo, fit.window.hi}},
          {"burn_in", cfg.burn_in},
          {"batches", fit.batches},
          {"ensemble", cfg.ensemble},
          {"right", edge_fit_json(fit.right)},
          {"left", edge_fit_json(fit.left)},
          {"profile",
           {{"t", prof.t},
            {"edge", "right"},
            {"mean", prof.mean},
            {"variance", prof.variance},
            {"skewness", prof.skewness},
            {"sup_norm", prof.sup_norm}}},
          {"theory_q2", theory}};

  const std::string pe = a.out + "_edges.csv", pr = a.out + "_rho.csv", pf = a.out + "_fit.json";
  write_text(pe, edges);
  write_text(pr, rho);
  write_text(pf, fj.dump(2) + "\n");
  manifest.output(pe);
  manifest.output(pr);
  manifest.output(pf);
  manifest.write(a.out + "_manifest.json");
  out << "v_B_hat = " << fit.v << " +- " << fit.v_stderr << ", D_hat = " << fit.D << " +- " << fit.D_stderr << "\n";
  return 0;
}

// ---- kernels ----

struct KernelsArgs {
  std::string cls = "unitary";
  std::string format = "csv";
  std::string out;
};

void setup_kernels(CLI::App& root, KernelsArgs& a) {
  auto* app = root.add_subcommand("kernels", "Dump the exact 16x16 transition kernel");
  app->add_option("--class", a.cls, "Gate symmetry class")->capture_default_str();
  app->add_option("--format", a.format, "csv or json")->capture_default_str();
  app->add_option("--out", a.out, "Output file (default: standard output)");
}

int do_kernels(const KernelsArgs& a, std::ostream& out) {
  const SymmetryClass cls = parse_class(a.cls);
  if (a.format != "csv" && a.format != "json") throw std::invalid_argument("format must be csv or json");
  Manifest manifest("kernels", Json{{"class", std::string(name(cls))}, {"format", a.format}, {"out", a.out}}, 0, 1);
  const TransitionKernel& k = kernel(cls);
  std::string text;
  if (a.format == "csv") {
    text = "from";
    for (int j = 0; j < 16; ++j) text += "," + TwoSitePauli::from_index(j).label();
    text += "\n";
    for (int i = 0; i < 16; ++i) {
      text += TwoSitePauli::from_index(i).label();
      for (int j = 0; j < 16; ++j) text += "," + fmt17(k.matrix()[i][j]);
      text += "\n";
    }
  } else {
    Json labels = Json::array(), exact = Json::array(), dec = Json::array();
    for (int i = 0; i < 16; ++i) {
      labels.push_back(TwoSitePauli::from_index(i).label());
      Json er = Json::array(), dr = Json::array();
      for (int j = 0; j < 16; ++j) {
        er.push_back(to_string(k.exact()[i][j]));
        dr.push_back(k.matrix()[i][j]);
      }
      exact.push_back(er);
      dec.push_back(dr);
    }
    text = Json{{"class", std::string(name(cls))}, {"labels", labels}, {"exact", exact}, {"matrix", dec}}.dump(2) + "\n";
  }
  if (a.out.empty()) {
    out << text;
    return 0;
  }
  write_text(a.out, text);
  manifest.output(a.out);
  manifest.write(a.out + ".manifest.json");
  return 0;
}

// ---- oracle ----

struct OracleArgs {
  Common common;
  std::string cls = "unitary";
  std::size_t samples = 100000;
  std::string out = "symcirc_oracle.json";
};

void setup_oracle(CLI::App& root, OracleArgs& a) {
  auto* app = root.add_subcommand("oracle", "Estimate the transition kernel from Haar-sampled gates");
  app->add_option("--class", a.cls, "Gate symmetry class")->capture_default_str();
  app->add_option("--samples", a.samples, "Number of sampled gates (>= 10000)")->capture_default_str();
  app->add_option("--out", a.out, "Output JSON file")->capture_default_str();
  add_common(app, a.common);
}

Json matrix_json(const Moments16& m) {
  Json rows = Json::array();
  for (const auto& r : m) rows.push_back(Json(std::vector<double>(r.begin(), r.end())));
  return rows;
}

int do_oracle(const OracleArgs& a, std::ostream& out) {
  const SymmetryClass cls = parse_class(a.cls);
  const std::uint64_t seed = a.common.resolved_seed();
  const int threads = a.common.resolved_threads();
  Manifest manifest("oracle", Json{{"class", std::string(name(cls))}, {"samples", a.samples}, {"out", a.out}}, seed,
                    threads);
  const KernelEstimate est = estimate_kernel(cls, a.samples, seed, threads);
  const OracleReport rep = compare(est, kernel(cls));

  Json labels = Json::array();
  for (int i = 0; i < 16; ++i) labels.push_back(TwoSitePauli::from_index(i).label());
  Json cross = Json::array();
  for (const auto& c : est.cross)
    cross.push_back(Json{{"a", TwoSitePauli::from_index(c.a).label()},
                         {"b", TwoSitePauli::from_index(c.b).label()},
                         {"p", TwoSitePauli::from_index(c.p).label()},
                         {"mean", c.mean},
                         {"std_error", c.std_error}});
  Json j{{"class", std::string(name(cls))},
         {"samples", est.samples},
         {"seed", seed},
         {"labels", labels},
         {"mean", matrix_json(est.mean)},
         {"std_error", matrix_json(est.std_error)},
         {"z", matrix_json(rep.z)},
         {"max_abs_dev", rep.max_abs_dev},
         {"max_z", rep.max_z},
         {"worst_entry", {labels[rep.worst_from], labels[rep.worst_to]}},
         {"failures", rep.failures},
         {"pass", rep.pass},
         {"max_residual", est.max_residual},
         {"cross_moments", cross}};
  if (cls == SymmetryClass::Orthogonal || cls == SymmetryClass::Symplectic)
    j["even_block"] = Json{{"mean", est.even_block_mean}, {"std_error", est.even_block_std_error}};
  if (cls == SymmetryClass::Symplectic) {
    const EvenRateResolution r = resolve_symplectic_even_rate(est);
    j["symplectic_even_rate"] = Json{{"pooled_mean", r.pooled_mean},
                                     {"pooled_std_error", r.pooled_std_error},
                                     {"consistent", to_string(r.consistent)},
                                     {"alternative", to_string(r.alternative)},
                                     {"z_consistent", r.z_consistent},
                                     {"z_alternative", r.z_alternative},
                                     {"supported", to_string(r.supported)}};
  }
  write_text(a.out, j.dump(2) + "\n");
  manifest.output(a.out);
  manifest.write(a.out + ".manifest.json");
  out << name(cls) << ": " << (rep.pass ? "pass" : "FAIL") << " (max |z| = " << rep.max_z
      << ", failures = " << rep.failures << ")\n";
  return 0;
}

// ---- theory ----

struct TheoryArgs {
  std::string cls = "unitary";
  int q = 2;
  int series = 8;
  std::string out;
};

void setup_theory(CLI::App& root, TheoryArgs& a) {
  auto* app = root.add_subcommand("theory", "Exact endpoint-walk results as JSON");
  app->add_option("--class", a.cls, "Gate symmetry class")->capture_default_str();
  app->add_option("--q", a.q, "Local dimension")->capture_default_str();
  app->add_option("--series", a.series, "Order of the large-q expansion (<= 8)")->capture_default_str();
  app->add_option("--out", a.out, "Output file (default: standard output)");
}

Json walk_json(const WalkSolution& w) {
  return Json{{"p", rational_json(w.p)},
              {"alpha", rational_json(w.alpha)},
              {"v_B", rational_json(w.v_B)},
              {"D0", rational_json(w.D0)},
              {"D", rational_json(w.D)}};
}

Json chain_json(const EvenOddState& c) {
  const auto& pr = c.probs;
  return Json{{"edge", to_string(c.edge)},
              {"n_even", rational_json(c.n_even)},
              {"n_odd", rational_json(c.n_odd)},
              {"back_even", rational_json(c.back_even)},
              {"back_odd", rational_json(c.back_odd)},
              {"p_even", rational_json(c.p_even)},
              {"p_odd", rational_json(c.p_odd)},
              {"p", rational_json(c.p)},
              {"four_state",
               {{"alpha", to_string(pr.alpha)},
                {"beta", to_string(pr.beta)},
                {"gamma", to_string(pr.gamma)},
                {"delta", to_string(pr.delta)},
                {"mu", to_string(pr.mu)},
                {"nu", to_string(pr.nu)},
                {"sigma", to_string(pr.sigma)},
                {"tau", to_string(pr.tau)}}}};
}

int do_theory(const TheoryArgs& a, std::ostream& out) {
  const SymmetryClass cls = parse_class(a.cls);
  if (a.q < 2) throw std::invalid_argument("q must be at least 2");
  const ClassTheory th = class_theory(cls, a.q, a.series);
  Json j{{"class", std::string(name(cls))},
         {"q", a.q},
         {"v_B", rational_json(th.v_closed)},
         {"p", rational_json(th.p_closed)}};
  if (th.walk) j["walk"] = walk_json(*th.walk);
  if (th.exact) j["exact_cumulants"] = Json{{"v_B", rational_json(th.exact->v)}, {"D", rational_json(th.exact->D)}};
  if (th.alternative) j["alternative_derivation"] = walk_json(*th.alternative);
  if (th.chain_right) j["chain_right"] = chain_json(*th.chain_right);
  if (th.chain_left) j["chain_left"] = chain_json(*th.chain_left);
  Json series = Json::array();
  for (const auto& c : th.series) series.push_back(to_string(c));
  j["series_inverse_q"] = series;
  const std::string text = j.dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
    return 0;
  }
  Manifest manifest("theory", Json{{"class", std::string(name(cls))}, {"q", a.q}, {"series", a.series}, {"out", a.out}},
                    0, 1);
  write_text(a.out, text);
  manifest.output(a.out);
  manifest.write(a.out + ".manifest.json");
  return 0;
}

// ---- gue ----

struct GueArgs {
  Common common;
  int qubits = 4;
  int samples = 100;
  double tmax = 200;
  std::string initial;
  std::string out = "symcirc_gue.csv";
};

void setup_gue(CLI::App& root, GueArgs& a) {
  auto* app = root.add_subcommand("gue", "Pauli-coefficient dynamics under GUE Hamiltonians");
  app->add_option("--qubits", a.qubits, "Number of qubits (3..5)")->capture_default_str();
  app->add_option("--samples", a.samples, "Number of Hamiltonians (>= 100)")->capture_default_str();
  app->add_option("--tmax", a.tmax, "Largest time on the grid")->capture_default_str();
  app->add_option("--initial", a.initial, "Initial Pauli string, e.g. XIII (default: X on qubit 0)");
  app->add_option("--out", a.out, "Output CSV file")->capture_default_str();
  add_common(app, a.common);
}

int do_gue(const GueArgs& a, std::ostream& out) {
  GueConfig cfg;
  cfg.qubits = a.qubits;
  cfg.samples = a.samples;
  cfg.tmax = a.tmax;
  cfg.seed = a.common.resolved_seed();
  cfg.initial = a.initial;
  const int threads = a.common.resolved_threads();
  Manifest manifest("gue",
                    Json{{"qubits", cfg.qubits},
                         {"samples", cfg.samples},
                         {"tmax", cfg.tmax},
                         {"initial", cfg.initial_operator().label()},
                         {"out", a.out}},
                    cfg.seed, threads);
  const GueRun run = ensemble_curves(cfg, threads);
  std::string csv = "t,g_initial,g_commute,g_anticommute,r2\n";
  for (std::size_t k = 0; k < run.times.size(); ++k)
    csv += fmt17(run.times[k]) + "," + fmt17(run.g_initial[k]) + "," + fmt17(run.g_commute[k]) + "," +
           fmt17(run.g_anticommute[k]) + "," + fmt17(run.r2[k]) + "\n";
  write_text(a.out, csv);
  manifest.output(a.out);
  Json summary{{"max_norm_error", run.max_norm_error}, {"infinite_time_initial", run.infinite_time_initial}};
  try {
    const GueRegimes g = locate_regimes(run);
    summary["dip_time"] = g.dip_time;
    summary["plateau_time"] = g.plateau_time;
    summary["plateau_ratio"] = g.plateau_ratio;
    summary["infinite_time_ratio"] = g.infinite_time_ratio;
    summary["ramp_commute"] = g.ramp_commute;
    summary["ramp_anticommute"] = g.ramp_anticommute;
    out << "plateau ratio " << g.plateau_ratio << " (infinite-time " << g.infinite_time_ratio << ")\n";
  } catch (const std::runtime_error& e) {
    summary["regimes"] = e.what();
  }
  manifest.extra() = summary;
  manifest.write(a.out + ".manifest.json");
  return 0;
}

// ---- repro ----

struct ReproArgs {
  std::string out;
};

void setup_repro(CLI::App& root, ReproArgs& a) {
  auto* app = root.add_subcommand("repro", "Butterfly-velocity table for all classes");
  app->add_option("--out", a.out, "Also write the table as JSON");
}

int do_repro(const ReproArgs& a, std::ostream& out) {
  Manifest manifest("repro", Json{{"out", a.out}}, 0, 1);
  const auto table = repro_table();
  print_repro_table(table, out);
  if (!a.out.empty()) {
    write_text(a.out, table.dump(2) + "\n");
    manifest.output(a.out);
    manifest.write(a.out + ".manifest.json");
  }
  return 0;
}

// key=value lines become "--key value" arguments placed before the explicit ones
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    for (auto& ch : key)
      if (ch == '_') ch = '-';
    if (key.empty()) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": empty key");
    injected.push_back("--" + key);
    injected.push_back(trim(line.substr(eq + 1)));
  }
  if (rest.empty()) throw std::invalid_argument("a subcommand must precede the config values");
  std::vector<std::string> merged{rest.front()};
  merged.insert(merged.end(), injected.begin(), injected.end());
  merged.insert(merged.end(), rest.begin() + 1, rest.end());
  return merged;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator growth in symmetric random circuits", "symcirc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--config", "key=value file; explicit flags override its values");

  SimulateArgs sim;
  KernelsArgs ker;
  OracleArgs ora;
  TheoryArgs the;
  GueArgs gue;
  ReproArgs rep;
  setup_simulate(app, sim);
  setup_kernels(app, ker);
  setup_oracle(app, ora);
  setup_theory(app, the);
  setup_gue(app, gue);
  setup_repro(app, rep);

  try {
    std::vector<std::string> expanded = expand_config(args);
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "simulate") return do_simulate(sim, out);
    if (sub == "kernels") return do_kernels(ker, out);
    if (sub == "oracle") return do_oracle(ora, out);
    if (sub == "theory") return do_theory(the, out);
    if (sub == "gue") return do_gue(gue, out);
    return do_repro(rep, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace symcirc::cli
