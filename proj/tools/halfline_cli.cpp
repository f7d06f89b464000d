// halfline: batch front end for the solver, the verification sweeps and the kernel tables.
//
//   halfline solve   --config run.json [--out DIR] [--grid NX NT]
//   halfline verify  --config run.json [--seed N]
//   halfline norm    --config run.json [--field PATH]
//   halfline profile --config run.json
//
// Exit status is 0 only when every requested check passes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "halfline/io.hpp"
#include "halfline/kernel.hpp"

using namespace halfline;
using json = nlohmann::ordered_json;

namespace {

constexpr int kFail = 1;
constexpr int kBadConfig = 2;
constexpr int kNumerical = 3;

// Thresholds on the solve diagnostics.
constexpr double kTraceTolerance = 1e-2;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << (v == 0.0 ? 0.0 : v);
  return os.str();
}

std::filesystem::path out_dir(const RunConfig& cfg) { return cfg.out; }

int run_solve(const RunConfig& cfg) {
  const SpaceTimeGrid g = cfg.grid();
  const IBVPData data = sample_data(seed_phi(cfg.data), seed_h(cfg.data), g, cfg.params, cfg.lambda);
  SolveOptions opts;
  opts.tol = cfg.tolerance;
  opts.max_iter = cfg.max_iter;
  opts.eps0 = cfg.eps0;
  opts.linear = cfg.linear;
  opts.cutoff = cfg.cutoff();
  const SolveResult res = picard_solve(data, g, opts);

  const auto dir = out_dir(cfg);
  const std::size_t stride = std::max<std::size_t>(1, std::max(g.x.size(), g.t.size()) / 128);
  write_field_slices(res.u, dir / "solution_slices.csv", stride);
  write_field(res.u, dir / "solution_field.csv");
  write_text(dir / "solve.json", solve_result_to_json(res, cfg));

  const bool ok = res.converged && res.boundary_error <= kTraceTolerance && res.initial_error <= kTraceTolerance;
  std::cout << "solve: " << (res.converged ? "converged" : "not converged") << " after "
            << res.iterate_deltas.size() << " iterations, residual " << num(res.residual_norm)
            << ", boundary error " << num(res.boundary_error) << ", initial error " << num(res.initial_error)
            << (res.u.under_resolved ? " (under-resolved)" : "") << '\n';
  return ok ? 0 : kFail;
}

int run_verify(const RunConfig& cfg) {
  if (cfg.n_x != cfg.n_t) throw std::invalid_argument("config: verify needs n_x == n_t");
  VerifyOptions opts;
  opts.n = cfg.n_x;
  opts.length_x = cfg.length_x;
  opts.period_t = cfg.period_t;
  opts.eps0 = cfg.eps0;
  opts.cutoff = cfg.cutoff();
  const auto dir = out_dir(cfg);
  bool all = true;
  for (const auto& name : cfg.estimates) {
    const EstimateId id = *estimate_from_string(name);
    const EstimateReport rep = run_estimate(id, cfg.params, opts, cfg.trials, cfg.tube_trials, cfg.seed);
    write_report(rep, dir / (name + ".json"));
    write_trial_log(rep, dir / (name + "_trials.csv"));
    const FrozenConstant k = frozen_constant(id);
    const bool ok = rep.valid_trials > 0 && std::isfinite(rep.sup_ratio) && rep.sup_ratio <= k.bound;
    all = all && ok;
    std::cout << name << ": sup " << num(rep.sup_ratio) << " mean " << num(rep.mean_ratio) << " over "
              << rep.valid_trials << " trials (bound " << num(k.bound) << ") " << (ok ? "ok" : "FAILED") << '\n';
  }
  return all ? 0 : kFail;
}

int run_norm(const RunConfig& cfg) {
  if (cfg.field.empty()) throw std::invalid_argument("config: norm needs a field path");
  const Field u = read_field(cfg.field);
  const double s = cfg.params.s, b = cfg.params.b;
  json j{{"field", cfg.field},
         {"s", s},
         {"b", b},
         {"hs_sup_slices", sup_slice_norm(u, s)},
         {"xsb", xsb_norm(u, s, b)},
         {"zsb", zsb_norm(u, s, b)},
         {"y", y_norm(u, s, b)}};
  const std::string text = j.dump(2) + "\n";
  write_text(out_dir(cfg) / "norm.json", text);
  std::cout << text;
  return 0;
}

int run_profile(const RunConfig& cfg) {
  constexpr double tau_max = 1e4;
  constexpr std::size_t rows = 97;
  const FrequencyProfile profile = profile_build(cfg.cutoff(), tau_max);
  std::ostringstream tab;
  tab << "tau,f1,f2,w,annihilation_residual\n";
  double worst = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const double tau = std::pow(tau_max, static_cast<double>(i) / (rows - 1));
    const double r = annihilation_residual(tau, profile);
    worst = std::max(worst, std::abs(r));
    tab << num(tau) << ',' << num(profile.f1(tau)) << ',' << num(profile.f2(tau)) << ',' << num(profile.w(tau)) << ','
        << num(r) << '\n';
  }
  std::ostringstream ker;
  ker << "tau,xi,F\n";
  for (double tau : {1.0, 10.0, 100.0, 1e3, 1e4}) {
    const KernelSlice F(tau, profile);
    const double rt = std::sqrt(tau);
    for (int k = 0; k < 64; ++k) {
      // xi from sqrt(tau)/20 to 20 sqrt(tau), log spaced
      const double xi = rt * std::pow(400.0, k / 63.0) / 20.0;
      ker << num(tau) << ',' << num(xi) << ',' << num(F(xi)) << '\n';
    }
  }
  const auto dir = out_dir(cfg);
  write_text(dir / "profile.csv", tab.str());
  write_text(dir / "f_kernel.csv", ker.str());
  const bool ok = worst <= 1e-8;
  std::cout << "profile: " << rows << " rows, max |(1 + w) f1 + 2 f2| = " << num(worst) << (ok ? "" : " FAILED")
            << '\n';
  return ok ? 0 : kFail;
}

void write_failure(const RunConfig& cfg, const std::string& command, const std::string& message) {
  try {
    json j{{"command", command}, {"status", "numerical_rejection"}, {"message", message}, {"partial", true}};
    write_text(out_dir(cfg) / "error.json", j.dump(2) + "\n");
  } catch (const std::exception&) {
    // the message has already gone to stderr
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-line quadratic Schrodinger solver and estimate checks"};
  app.require_subcommand(1);
  std::string config_path, out, field;
  std::uint64_t seed = 0;
  std::vector<std::size_t> grid;

  std::string command;
  for (const char* name : {"solve", "verify", "norm", "profile"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory (overrides the config)");
    sub->add_option("--seed", seed, "random seed (overrides the config)");
    sub->add_option("--grid", grid, "N_X N_T (overrides the config)")->expected(2);
    if (std::string(name) == "norm") sub->add_option("--field", field, "field CSV (overrides the config)");
    sub->callback([&command, name] { command = name; });
  }
  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
    if (!out.empty()) cfg.out = out;
    if (app.get_subcommand(command)->count("--seed")) cfg.seed = seed;
    if (grid.size() == 2) {
      cfg.n_x = grid[0];
      cfg.n_t = grid[1];
    }
    if (!field.empty()) cfg.field = field;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "halfline: " << e.what() << '\n';
    return kBadConfig;
  }

  try {
    if (command == "solve") return run_solve(cfg);
    if (command == "verify") return run_verify(cfg);
    if (command == "norm") return run_norm(cfg);
    return run_profile(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "halfline " << command << ": " << e.what() << '\n';
    write_failure(cfg, command, e.what());
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "halfline " << command << ": " << e.what() << '\n';
    write_failure(cfg, command, e.what());
    return kNumerical;
  }
}
