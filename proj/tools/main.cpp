// dunkl: command-line front end for the exact symmetric-function layer, the
// transition densities, the simulators and the verification suites.
//
// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 numeric cap (series or
// guard), 5 failed assertion, 1 anything else.
#include "io.hpp"

#include "dunkl/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>

namespace {

using cli::fmt17;
using cli::json;
using namespace dunkl;

constexpr int kParse = 2, kDomain = 3, kNumeric = 4, kAssert = 5;

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::logic_error&) {
      throw ParseError("not a number: '" + cell + "'");
    }
    while (used < cell.size() && cell[used] == ' ') ++used;
    if (used != cell.size()) throw ParseError("not a number: '" + cell + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty vector");
  return out;
}

std::string vector_text(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt17(v[i]);
  return s;
}

// ---------------------------------------------------------------- jack

int cmd_jack(const std::string& tau_text, const std::string& alpha_text, int n, const std::vector<std::string>& points) {
  const Partition tau = parse_partition(tau_text);
  const Rational alpha = parse_rational(alpha_text);
  const auto& row = jack_expansion(tau, alpha, n);
  std::cout << "tau " << tau << "  alpha " << alpha << "  N " << n << '\n';
  std::cout << "eigenvalue " << row.eigenvalue << '\n';
  std::cout << "at_ones " << jack_at_ones(tau, alpha, n) << '\n';
  for (const auto& lambda : enumerate_partitions(tau.modulus(), n)) {
    const Rational u = row.coefficient(lambda);
    if (u != 0) std::cout << "m[" << lambda << "] " << u << '\n';
  }
  for (const auto& p : points) {
    const auto x = parse_vector(p);
    if (static_cast<int>(x.size()) != n) throw DomainError("--at point needs " + std::to_string(n) + " coordinates");
    std::cout << "P(" << vector_text(x) << ") " << fmt17(eval_jack(tau, alpha, x)) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- intertwine

int cmd_intertwine(const std::string& lambda_text, const std::string& k_text, int n, bool limit) {
  const Partition lambda = parse_partition(lambda_text);
  if (limit) {
    const auto lim = intertwine_limit(lambda, n);
    std::cout << "lambda " << lambda << "  N " << n << "  k -> infinity\n";
    std::cout << "coefficient " << lim.coefficient << '\n';
    std::cout << "power " << lim.power << '\n';
    const SymPoly form = lim.monomial_form();
    for (const auto& [mu, c] : form.terms()) std::cout << "m[" << mu << "] " << c << '\n';
    return 0;
  }
  const Rational k = parse_rational(k_text);
  const auto r = intertwine_monomial(lambda, k, n);
  std::cout << "lambda " << lambda << "  k " << k << "  N " << n << '\n';
  for (const auto& mu : enumerate_partitions(lambda.modulus(), n)) {
    const Rational c = r.output.coefficient(mu);
    if (c != 0) std::cout << "m[" << mu << "] " << c << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- tpd

struct TpdArgs {
  std::string x, y, method = "series";
  double t = 1.0;
  std::optional<double> beta, k;
  int max_degree = 40;
  double tol = 1e-12;
  bool json_out = false;
};

int cmd_tpd(const TpdArgs& a) {
  if (a.beta && a.k) throw ParseError("give either --beta or --k, not both");
  TpdQuery q;
  q.t = a.t;
  q.x = parse_vector(a.x);
  q.y = parse_vector(a.y);
  q.beta = a.beta ? *a.beta : a.k ? 2.0 * *a.k : 2.0;
  q.controls.max_degree = a.max_degree;
  q.controls.rel_tol = a.tol;
  json out{{"t", q.t}, {"x", q.x}, {"y", q.y}, {"beta", q.beta}};
  bool capped = false;
  std::optional<double> series_value, other_value;
  auto series_json = [&](const TpdResult& r) {
    capped = capped || !r.series.converged;
    return json{{"value", fmt17(r.value)},
                {"degree", r.series.degree},
                {"last_layer", fmt17(r.series.last_layer)},
                {"converged", r.series.converged}};
  };
  if (a.method == "series" || a.method == "both") {
    const auto r = dyson_tpd_series(q);
    series_value = r.value;
    out["series"] = series_json(r);
  }
  if (a.method == "dunkl") {
    const auto r = dunkl_tpd_symmetric(q);
    series_value = r.value;
    out["dunkl"] = series_json(r);
  }
  if (a.method == "grabiner" || a.method == "both") {
    other_value = grabiner_tpd(q);
    out["grabiner"] = {{"value", fmt17(*other_value)}};
  }
  if (!out.contains("series") && !out.contains("dunkl") && !out.contains("grabiner"))
    throw ParseError("--method must be series, grabiner, both or dunkl");
  if (series_value && other_value) out["relative_difference"] = fmt17(std::abs(*series_value - *other_value) / std::abs(*other_value));
  if (a.json_out) {
    std::cout << out.dump(2) << '\n';
  } else {
    for (const char* key : {"series", "dunkl"})
      if (out.contains(key))
        std::cout << key << " " << out[key]["value"].get<std::string>() << "  degree " << out[key]["degree"]
                  << "  last_layer " << out[key]["last_layer"].get<std::string>() << "  converged "
                  << (out[key]["converged"].get<bool>() ? "yes" : "no") << '\n';
    if (out.contains("grabiner")) std::cout << "grabiner " << out["grabiner"]["value"].get<std::string>() << '\n';
    if (out.contains("relative_difference"))
      std::cout << "relative_difference " << out["relative_difference"].get<std::string>() << '\n';
  }
  if (capped) {
    std::cerr << "series hit max degree " << a.max_degree << " before reaching tolerance\n";
    return kNumeric;
  }
  return 0;
}

// ---------------------------------------------------------------- simulation configs

struct RunPlan {
  std::string process = "dyson";
  SimConfig cfg;
  std::vector<double> x0;
};

json plan_json(const RunPlan& s) {
  const SimConfig& c = s.cfg;
  return {{"process", s.process}, {"n", c.n},
          {"k", fmt17(c.k)},      {"dt", fmt17(c.dt)},
          {"t_end", fmt17(c.t_end)}, {"n_traj", c.n_traj},
          {"seed", c.seed},       {"guard_depth", c.guard_depth},
          {"jump_cap", fmt17(c.jump_cap)}, {"max_drift_fraction", fmt17(c.max_drift_fraction)},
          {"n_records", c.n_records}, {"symmetric_start", c.symmetric_start},
          {"x0", vector_text(s.x0)}};
}

double number_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return parse_vector(v.get<std::string>()).at(0);
  if (!v.is_number()) throw ParseError(std::string("config field '") + key + "' must be a number");
  return v.get<double>();
}

void apply_json(RunPlan& s, const json& j) {
  try {
    SimConfig& c = s.cfg;
    if (j.contains("process")) s.process = j.at("process").get<std::string>();
    if (j.contains("n")) c.n = j.at("n").get<int>();
    if (j.contains("k") && j.contains("beta")) throw ParseError("config gives both k and beta");
    if (j.contains("k")) c.k = number_field(j, "k");
    if (j.contains("beta")) c.k = number_field(j, "beta") / 2.0;
    if (j.contains("dt")) c.dt = number_field(j, "dt");
    if (j.contains("t_end")) c.t_end = number_field(j, "t_end");
    if (j.contains("n_traj")) c.n_traj = j.at("n_traj").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("guard_depth")) c.guard_depth = j.at("guard_depth").get<int>();
    if (j.contains("jump_cap")) c.jump_cap = number_field(j, "jump_cap");
    if (j.contains("max_drift_fraction")) c.max_drift_fraction = number_field(j, "max_drift_fraction");
    if (j.contains("n_records")) c.n_records = j.at("n_records").get<int>();
    if (j.contains("symmetric_start")) c.symmetric_start = j.at("symmetric_start").get<bool>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("x0")) {
      const auto& v = j.at("x0");
      s.x0 = v.is_string() ? parse_vector(v.get<std::string>()) : v.get<std::vector<double>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

void finalize_plan(RunPlan& s) {
  if (s.process != "dyson" && s.process != "dunkl") throw DomainError("process must be dyson or dunkl");
  if (s.x0.empty()) {
    s.x0.resize(static_cast<std::size_t>(s.cfg.n));
    for (int i = 0; i < s.cfg.n; ++i) s.x0[static_cast<std::size_t>(i)] = i - 0.5 * (s.cfg.n - 1);
  }
  if (static_cast<int>(s.x0.size()) != s.cfg.n) throw DomainError("x0 must have n components");
  s.cfg.validate();
}

struct Outputs {
  std::vector<std::string> files;
};

std::string stem_of(const std::string& out) {
  const std::filesystem::path p(out);
  return (p.parent_path() / p.stem()).string();
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_manifest(const std::string& command, const json& config, const RunPlan* plan, const Outputs& outs,
                    double seconds, const std::string& path) {
  json files = json::array();
  for (const auto& f : outs.files)
    files.push_back({{"path", std::filesystem::path(f).filename().string()}, {"sha256", cli::sha256_file(f)}});
  json m{{"command", command}, {"config", config}, {"library_version", DUNKL_VERSION}};
  if (plan) {
    json first = json::array();
    for (int i = 0; i < std::min(plan->cfg.n_traj, 4); ++i) first.push_back(stream_seed(plan->cfg.seed, static_cast<std::uint64_t>(i)));
    m["seed_lineage"] = {{"seed", plan->cfg.seed},
                         {"stream", "mt19937_64 per trajectory, seeded with stream_seed(seed, trajectory index)"},
                         {"first_stream_seeds", first}};
  }
  m["started_utc"] = utc_now();
  m["wall_clock_s"] = seconds;
  m["outputs"] = files;
  cli::write_text(path, m.dump(2) + "\n");
}

// ---------------------------------------------------------------- simulate

Outputs run_simulation(const RunPlan& s, const std::string& out, json* summary) {
  const Ensemble e = s.process == "dyson" ? simulate_dyson(s.cfg, s.x0) : simulate_dunkl(s.cfg, s.x0);
  Outputs o;
  cli::write_ensemble_csv(e, out);
  o.files.push_back(out);
  const json sum = cli::summary_json(e);
  const std::string summary_path = stem_of(out) + ".summary.json";
  cli::write_text(summary_path, sum.dump(2) + "\n");
  o.files.push_back(summary_path);
  if (s.process == "dunkl") {
    const std::string jumps = stem_of(out) + ".jumps.csv";
    cli::write_jumps_csv(e, jumps);
    o.files.push_back(jumps);
  }
  if (summary) *summary = sum;
  return o;
}

int cmd_simulate(RunPlan s, const std::string& out) {
  finalize_plan(s);
  const auto start = std::chrono::steady_clock::now();
  json summary;
  const Outputs o = run_simulation(s, out, &summary);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest("simulate", plan_json(s), &s, o, secs, stem_of(out) + ".manifest.json");
  for (const auto& rec : summary["records"]) {
    std::cout << "t=" << rec["time"].get<std::string>();
    for (const auto& c : rec["sorted"]) std::cout << "  mean " << c["mean"].get<std::string>().substr(0, 10) << " var " << c["variance"].get<std::string>().substr(0, 10);
    std::cout << '\n';
  }
  for (const auto& f : o.files) std::cout << "wrote " << f << '\n';
  std::cout << "wrote " << stem_of(out) << ".manifest.json\n";
  return 0;
}

// ---------------------------------------------------------------- freeze

Outputs run_freeze(const RunPlan& s, const std::string& out, FreezeReport* report) {
  const FreezeReport r = freeze_experiment(s.cfg, s.x0);
  if (report) *report = r;
  Outputs o;
  if (out.empty()) return o;
  std::ofstream f(out);
  if (!f) throw DomainError("cannot write " + out);
  f << "particle,prediction,mean_centered,mean_abs_deviation\n";
  for (int i = 0; i < r.n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    f << i << ',' << fmt17(r.prediction[u]) << ',' << fmt17(r.mean_config[u]) << ',' << fmt17(r.mean_abs_deviation[u]) << '\n';
  }
  f.close();
  o.files.push_back(out);
  return o;
}

int cmd_freeze(RunPlan s, const std::string& out, bool json_out) {
  s.process = "dyson";
  finalize_plan(s);
  const auto start = std::chrono::steady_clock::now();
  FreezeReport r;
  const Outputs o = run_freeze(s, out, &r);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.empty()) write_manifest("freeze", plan_json(s), &s, o, secs, stem_of(out) + ".manifest.json");
  if (json_out) {
    json j{{"n", r.n}, {"k", r.k}, {"t", r.t}, {"n_traj", r.n_traj}, {"prediction", r.prediction},
           {"mean_centered", r.mean_config}, {"mean_abs_deviation", r.mean_abs_deviation},
           {"mean_max_deviation", r.mean_max_deviation}, {"rms_deviation", r.rms_deviation},
           {"mean_max_deviation_uncentered", r.mean_max_deviation_uncentered},
           {"rms_deviation_uncentered", r.rms_deviation_uncentered}, {"mean_center", r.mean_center}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::printf("N=%d k=%g t=%g trajectories=%d (positions scaled by 1/sqrt(k), centered)\n", r.n, r.k, r.t, r.n_traj);
  std::printf("%8s %14s %14s %14s\n", "particle", "sqrt(2t)z", "mean", "mean|dev|");
  for (int i = 0; i < r.n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    std::printf("%8d %14.8f %14.8f %14.3e\n", i, r.prediction[u], r.mean_config[u], r.mean_abs_deviation[u]);
  }
  std::printf("mean max deviation  %.6e\nrms deviation       %.6e\n", r.mean_max_deviation, r.rms_deviation);
  std::printf("uncentered: mean max %.6e  rms %.6e  (mean center %.3e)\n", r.mean_max_deviation_uncentered,
              r.rms_deviation_uncentered, r.mean_center);
  return 0;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const std::string& manifest_path, const std::string& out_dir) {
  json m;
  try {
    m = json::parse(cli::read_text(manifest_path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  const std::string command = m.at("command").get<std::string>();
  RunPlan s;
  apply_json(s, m.at("config"));
  finalize_plan(s);
  const auto& recorded = m.at("outputs");
  const std::filesystem::path dir = out_dir.empty() ? std::filesystem::path(manifest_path).parent_path() : std::filesystem::path(out_dir);
  const std::string first = recorded.at(0).at("path").get<std::string>();
  const std::string out = (dir / ("replay_" + first)).string();
  Outputs o;
  if (command == "simulate") o = run_simulation(s, out, nullptr);
  else if (command == "freeze") o = run_freeze(s, out, nullptr);
  else throw DomainError("cannot replay command '" + command + "'");
  if (o.files.size() != recorded.size()) throw AssertionFailure("replay produced a different set of files");
  bool all = true;
  for (std::size_t i = 0; i < o.files.size(); ++i) {
    const std::string want = recorded[i].at("sha256").get<std::string>();
    const std::string got = cli::sha256_file(o.files[i]);
    const bool same = want == got;
    all = all && same;
    std::cout << (same ? "match    " : "MISMATCH ") << recorded[i].at("path").get<std::string>() << "  " << got << '\n';
  }
  if (!all) throw AssertionFailure("replay digests differ");
  return 0;
}

// ---------------------------------------------------------------- stats

int cmd_stats(const std::string& in, const std::string& check) {
  const Ensemble e = cli::read_ensemble_csv(in);
  const json sum = cli::summary_json(e);
  std::cout << sum.dump(2) << '\n';
  if (!check.empty()) {
    json want;
    try {
      want = json::parse(cli::read_text(check));
    } catch (const json::exception& ex) {
      throw ParseError(std::string("summary: ") + ex.what());
    }
    if (want != sum) throw AssertionFailure("summary recomputed from " + in + " differs from " + check);
    std::cout << "summary matches " << check << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- roots / norm

int cmd_roots(int n) {
  const auto& z = hermite_roots(n).roots;
  for (std::size_t i = 0; i < z.size(); ++i) std::cout << "z[" << i << "] " << fmt17(z[i]) << '\n';
  const auto id = root_identities(n);
  std::printf("sum                 %.3e\n", id.sum);
  std::printf("sum_sq              %.17g  (reference %.17g)\n", id.sum_sq, id.sum_sq_reference);
  std::printf("2 log|h_N(z)|       %.17g  (reference %.17g)\n", id.log_discriminant, id.log_discriminant_reference);
  std::printf("fixed point resid.  %.3e\n", id.fixed_point_residual);
  std::printf("max |H_N(z)| scaled %.3e\n", id.max_hermite_residual);
  return 0;
}

int cmd_norm(int n, const std::string& k_text, std::size_t samples, std::uint64_t seed) {
  const Rational k = parse_rational(k_text);
  const auto w = weight_norm(n, k);
  std::cout << "N " << n << "  k " << k << "  gamma " << w.gamma << "  vandermonde_power " << w.vandermonde_power << '\n';
  std::cout << "c_k " << fmt17(w.c_k) << "\nlog_c_k " << fmt17(w.log_c_k) << '\n';
  if (samples > 0) {
    const auto r = mc_norm_check(n, to_double(k), samples, seed);
    std::cout << "monte_carlo " << fmt17(r.estimate) << "  standard_error " << fmt17(r.standard_error)
              << "\nrelative_error " << fmt17(r.relative_error) << "  z_score " << fmt17(r.z_score) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const SuiteOptions& o) {
  const SuiteReport r = run_suite(suite, o);
  std::cout << "suite " << r.suite << ": " << r.title << '\n';
  for (const auto& c : r.checks)
    std::printf("  %-44s %-14.6g %-2s %-10.6g %s\n", c.name.c_str(), c.measured, c.relation.c_str(), c.tolerance, c.pass ? "pass" : "FAIL");
  std::cout << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? 0 : kAssert;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl intertwining operator, Dyson densities and freezing-regime tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(DUNKL_VERSION));
  std::function<int()> action;

  // jack
  std::string tau = "1", alpha = "1";
  int jack_n = 1;
  std::vector<std::string> at;
  auto* jack = app.add_subcommand("jack", "Jack P monomial row, eigenvalue and evaluations");
  jack->add_option("--tau", tau, "partition, e.g. 2,1")->required();
  jack->add_option("--alpha", alpha, "Jack parameter as p/q")->required();
  jack->add_option("--n", jack_n, "number of variables")->required();
  jack->add_option("--at", at, "evaluation point x1,...,xN (repeatable)");
  jack->callback([&] { action = [&] { return cmd_jack(tau, alpha, jack_n, at); }; });

  // intertwine
  std::string lambda = "1", kq = "1";
  int it_n = 1;
  bool limit = false;
  auto* inter = app.add_subcommand("intertwine", "exact action of V_k on m_lambda");
  inter->add_option("--lambda", lambda, "partition")->required();
  inter->add_option("--k", kq, "multiplicity as p/q");
  inter->add_option("--n", it_n, "number of variables")->required();
  inter->add_flag("--limit", limit, "print the k -> infinity form");
  inter->callback([&] { action = [&] { return cmd_intertwine(lambda, kq, it_n, limit); }; });

  // tpd
  TpdArgs ta;
  auto* tpd = app.add_subcommand("tpd", "transition density of Dyson's model");
  tpd->add_option("--x", ta.x, "start x1<...<xN")->required();
  tpd->add_option("--y", ta.y, "end y1<...<yN")->required();
  tpd->add_option("--t", ta.t, "time");
  tpd->add_option("--beta", ta.beta, "Dyson coupling");
  tpd->add_option("--k", ta.k, "multiplicity (beta = 2k)");
  tpd->add_option("--method", ta.method, "series, grabiner, both or dunkl");
  tpd->add_option("--max-degree", ta.max_degree, "series degree cap");
  tpd->add_option("--tol", ta.tol, "relative layer tolerance");
  tpd->add_flag("--json", ta.json_out, "JSON output");
  tpd->callback([&] { action = [&] { return cmd_tpd(ta); }; });

  // simulate / freeze share the run options
  RunPlan plan;
  std::string config_path, out, x0_text, process, beta_text, k_text_sim;
  std::optional<int> o_n, o_traj, o_records, o_threads;
  std::optional<double> o_dt, o_t;
  std::optional<std::uint64_t> o_seed;
  bool symmetric = false, json_out = false;
  auto add_run_options = [&](CLI::App* sc) {
    sc->add_option("--config", config_path, "JSON file with SimConfig fields");
    sc->add_option("--n", o_n, "particles");
    sc->add_option("--k", k_text_sim, "multiplicity k (beta = 2k)");
    sc->add_option("--beta", beta_text, "Dyson coupling");
    sc->add_option("--dt", o_dt, "time step");
    sc->add_option("--t,--t-end", o_t, "horizon");
    sc->add_option("--traj", o_traj, "trajectories");
    sc->add_option("--seed", o_seed, "64-bit seed");
    sc->add_option("--threads", o_threads, "worker threads (default DUNKL_THREADS or all cores)");
    sc->add_option("--x0", x0_text, "initial positions x1<...<xN");
  };
  auto build_plan = [&](bool freeze_defaults) {
    RunPlan s;
    if (freeze_defaults) {
      s.cfg.k = 1e4;
      s.cfg.dt = 1e-4;
      s.cfg.n_traj = 100;
      s.cfg.n = 3;
    }
    if (!config_path.empty()) {
      try {
        apply_json(s, json::parse(cli::read_text(config_path)));
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
      }
    }
    if (!process.empty()) s.process = process;
    if (o_n) s.cfg.n = *o_n;
    if (!k_text_sim.empty() && !beta_text.empty()) throw ParseError("give either --k or --beta");
    if (!k_text_sim.empty()) s.cfg.k = parse_vector(k_text_sim).at(0);
    if (!beta_text.empty()) s.cfg.k = parse_vector(beta_text).at(0) / 2.0;
    if (o_dt) s.cfg.dt = *o_dt;
    if (o_t) s.cfg.t_end = *o_t;
    if (o_traj) s.cfg.n_traj = *o_traj;
    if (o_seed) s.cfg.seed = *o_seed;
    if (o_threads) s.cfg.threads = *o_threads;
    if (o_records) s.cfg.n_records = *o_records;
    if (symmetric) s.cfg.symmetric_start = true;
    if (!x0_text.empty()) s.x0 = parse_vector(x0_text);
    return s;
  };
  auto* sim = app.add_subcommand("simulate", "simulate Dyson's model or the Dunkl process to CSV");
  add_run_options(sim);
  sim->add_option("--process", process, "dyson or dunkl");
  sim->add_option("--records", o_records, "number of records after t=0");
  sim->add_flag("--symmetric", symmetric, "Dunkl: uniformly permuted start");
  sim->add_option("--out", out, "trajectory CSV path")->required();
  sim->callback([&] { action = [&] { return cmd_simulate(build_plan(false), out); }; });

  auto* fr = app.add_subcommand("freeze", "freezing experiment against sqrt(2t) Hermite roots");
  add_run_options(fr);
  fr->add_option("--out", out, "deviation table CSV (optional)");
  fr->add_flag("--json", json_out, "JSON output");
  fr->callback([&] { action = [&] { return cmd_freeze(build_plan(true), out, json_out); }; });

  // stats
  std::string stats_in, stats_check;
  auto* st = app.add_subcommand("stats", "summary statistics of a trajectory CSV");
  st->add_option("--in", stats_in, "trajectory CSV")->required();
  st->add_option("--check", stats_check, "summary JSON to compare against");
  st->callback([&] { action = [&] { return cmd_stats(stats_in, stats_check); }; });

  // replay
  std::string manifest, replay_dir;
  auto* rp = app.add_subcommand("replay", "rerun a manifest and compare output digests");
  rp->add_option("--manifest", manifest, "manifest JSON")->required();
  rp->add_option("--out-dir", replay_dir, "directory for the replayed files");
  rp->callback([&] { action = [&] { return cmd_replay(manifest, replay_dir); }; });

  // roots
  int roots_n = 1;
  auto* ro = app.add_subcommand("roots", "Hermite roots and their identities");
  ro->add_option("--n", roots_n, "degree")->required();
  ro->callback([&] { action = [&] { return cmd_roots(roots_n); }; });

  // norm
  int norm_n = 1;
  std::string norm_k = "1";
  std::size_t samples = 0;
  std::uint64_t norm_seed = 1;
  auto* no = app.add_subcommand("norm", "Selberg normalization c_k, optionally by Monte Carlo");
  no->add_option("--n", norm_n, "particles")->required();
  no->add_option("--k", norm_k, "multiplicity as p/q")->required();
  no->add_option("--samples", samples, "Monte Carlo samples");
  no->add_option("--seed", norm_seed, "seed");
  no->callback([&] { action = [&] { return cmd_norm(norm_n, norm_k, samples, norm_seed); }; });

  // verify
  std::string suite;
  SuiteOptions vo;
  std::optional<int> v_n, v_traj, v_threads;
  std::optional<double> v_k;
  std::optional<std::uint64_t> v_seed;
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite, "one of: quadratic limit beta2 thm1 hermite freeze jack selberg normalization")->required();
  ve->add_option("--n", v_n, "particles / degree");
  ve->add_option("--k", v_k, "multiplicity");
  ve->add_option("--traj", v_traj, "trajectories or samples");
  ve->add_option("--seed", v_seed, "seed");
  ve->add_option("--threads", v_threads, "worker threads");
  ve->callback([&] {
    action = [&] {
      vo.n = v_n;
      vo.k = v_k;
      vo.traj = v_traj;
      vo.seed = v_seed;
      vo.threads = v_threads.value_or(0);
      return cmd_verify(suite, vo);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kAssert;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
