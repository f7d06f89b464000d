#include "halfline/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace halfline {

using json = nlohmann::ordered_json;

namespace {

bool power_of_two(std::size_t n) { return n >= 8 && (n & (n - 1)) == 0; }

template <class T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json grid_json(const Grid1D& g) { return {{"n_points", g.size()}, {"spacing", g.spacing()}, {"origin", g.origin()}}; }

Grid1D grid_from_json(const json& j) {
  return Grid1D(j.at("n_points").get<std::size_t>(), j.at("spacing").get<double>(), j.at("origin").get<double>());
}

json params_json(const SobolevParams& p) { return {{"s", p.s}, {"b", p.b}, {"sigma", p.sigma}}; }

// Fixed formatting keeps repeated runs byte-identical.
std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << (v == 0.0 ? 0.0 : v);
  return os.str();
}

}  // namespace

std::function<cplx(double)> seed_phi(const DataConfig& d) {
  return [d](double x) {
    const double y = (x - d.phi_centre) / d.phi_width;
    return cplx(d.phi_amplitude * smooth_step(x / d.phi_ramp) * std::exp(-y * y));
  };
}

std::function<cplx(double)> seed_h(const DataConfig& d) {
  return [d](double t) { return cplx(t <= 0.0 ? 0.0 : d.h_amplitude * t * t * std::exp(-t)); };
}

void RunConfig::validate() const {
  if (!power_of_two(n_x)) throw std::invalid_argument("config: n_x must be a power of two >= 8");
  if (!power_of_two(n_t)) throw std::invalid_argument("config: n_t must be a power of two >= 8");
  if (!(length_x > 0.0)) throw std::invalid_argument("config: length_x must be positive");
  if (!(period_t > 2.0)) throw std::invalid_argument("config: period_t must exceed 2 so that [0, 1] fits");
  cutoff().validate();
  params.validate_solver_regime();
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("config: lambda must lie in (0, 1]");
  if (!(tolerance > 0.0)) throw std::invalid_argument("config: tolerance must be positive");
  if (max_iter < 1) throw std::invalid_argument("config: max_iter must be >= 1");
  if (!(data.phi_width > 0.0) || !(data.phi_ramp > 0.0)) {
    throw std::invalid_argument("config: data.phi_width and data.phi_ramp must be positive");
  }
  if (!(eps0 > 0.0)) throw std::invalid_argument("config: eps0 must be positive");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  for (const auto& e : estimates) {
    if (!estimate_from_string(e)) throw std::invalid_argument("config: unknown estimate id '" + e + "'");
  }
  if (out.empty()) throw std::invalid_argument("config: out must name a directory");
}

SpaceTimeGrid RunConfig::grid() const {
  return {Grid1D::centered(n_x, length_x), Grid1D::centered(n_t, period_t)};
}

CutoffConfig RunConfig::cutoff() const { return {delta, ramp_width}; }

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  reject_unknown(j,
                 {"n_x", "n_t", "length_x", "period_t", "s", "b", "sigma", "delta", "ramp_width", "lambda",
                  "tolerance", "max_iter", "eps0", "linear", "seed", "trials", "tube_trials", "estimates", "field",
                  "out", "data"},
                 "config");
  RunConfig c;
  try {
    take(j, "n_x", c.n_x);
    take(j, "n_t", c.n_t);
    take(j, "length_x", c.length_x);
    take(j, "period_t", c.period_t);
    take(j, "s", c.params.s);
    take(j, "b", c.params.b);
    take(j, "sigma", c.params.sigma);
    take(j, "delta", c.delta);
    take(j, "ramp_width", c.ramp_width);
    take(j, "lambda", c.lambda);
    take(j, "tolerance", c.tolerance);
    take(j, "max_iter", c.max_iter);
    take(j, "eps0", c.eps0);
    take(j, "linear", c.linear);
    take(j, "seed", c.seed);
    take(j, "trials", c.trials);
    take(j, "tube_trials", c.tube_trials);
    take(j, "estimates", c.estimates);
    take(j, "field", c.field);
    take(j, "out", c.out);
    if (j.contains("data")) {
      const json& d = j.at("data");
      if (!d.is_object()) throw std::invalid_argument("config: data must be an object");
      reject_unknown(d, {"phi_amplitude", "phi_centre", "phi_width", "phi_ramp", "h_amplitude"}, "data");
      take(d, "phi_amplitude", c.data.phi_amplitude);
      take(d, "phi_centre", c.data.phi_centre);
      take(d, "phi_width", c.data.phi_width);
      take(d, "phi_ramp", c.data.phi_ramp);
      take(d, "h_amplitude", c.data.h_amplitude);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: wrong value type: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) { return parse_config(read_text(path)); }

std::string config_to_json(const RunConfig& c) {
  json j{{"n_x", c.n_x},
         {"n_t", c.n_t},
         {"length_x", c.length_x},
         {"period_t", c.period_t},
         {"s", c.params.s},
         {"b", c.params.b},
         {"sigma", c.params.sigma},
         {"delta", c.delta},
         {"ramp_width", c.ramp_width},
         {"lambda", c.lambda},
         {"tolerance", c.tolerance},
         {"max_iter", c.max_iter},
         {"eps0", c.eps0},
         {"linear", c.linear},
         {"seed", c.seed},
         {"trials", c.trials},
         {"tube_trials", c.tube_trials},
         {"estimates", c.estimates},
         {"field", c.field},
         {"out", c.out},
         {"data",
          {{"phi_amplitude", c.data.phi_amplitude},
           {"phi_centre", c.data.phi_centre},
           {"phi_width", c.data.phi_width},
           {"phi_ramp", c.data.phi_ramp},
           {"h_amplitude", c.data.h_amplitude}}}};
  return j.dump(2);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_field(const Field& u, const std::filesystem::path& csv_path) {
  std::ostringstream os;
  os << "x_index,t_index,re,im\n";
  for (std::size_t ix = 0; ix < u.grid.x.size(); ++ix) {
    for (std::size_t k = 0; k < u.grid.t.size(); ++k) {
      os << ix << ',' << k << ',' << num(u(ix, k).real()) << ',' << num(u(ix, k).imag()) << '\n';
    }
  }
  write_text(csv_path, os.str());
  json side{{"x_grid", grid_json(u.grid.x)}, {"t_grid", grid_json(u.grid.t)}, {"under_resolved", u.under_resolved}};
  write_text(csv_path.string() + ".json", side.dump(2) + "\n");
}

Field read_field(const std::filesystem::path& csv_path) {
  const json side = json::parse(read_text(csv_path.string() + ".json"));
  const SpaceTimeGrid g{grid_from_json(side.at("x_grid")), grid_from_json(side.at("t_grid"))};
  Field u(g);
  u.under_resolved = side.value("under_resolved", false);
  std::istringstream in(read_text(csv_path));
  std::string line;
  std::getline(in, line);
  if (line != "x_index,t_index,re,im") throw std::runtime_error(csv_path.string() + ": unexpected header");
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, re, im;
    std::getline(row, a, ',');
    std::getline(row, b, ',');
    std::getline(row, re, ',');
    std::getline(row, im, ',');
    const std::size_t ix = std::stoul(a), k = std::stoul(b);
    if (ix >= g.x.size() || k >= g.t.size()) throw std::runtime_error(csv_path.string() + ": index out of range");
    u(ix, k) = cplx(std::stod(re), std::stod(im));
    ++count;
  }
  if (count != g.size()) throw std::runtime_error(csv_path.string() + ": expected " + std::to_string(g.size()) + " rows");
  return u;
}

void write_field_slices(const Field& u, const std::filesystem::path& csv_path, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("write_field_slices: stride must be positive");
  std::ostringstream os;
  os << "x,t,re_u,im_u\n";
  for (std::size_t ix = 0; ix < u.grid.x.size(); ix += stride) {
    for (std::size_t k = 0; k < u.grid.t.size(); k += stride) {
      os << num(u.grid.x.node(ix)) << ',' << num(u.grid.t.node(k)) << ',' << num(u(ix, k).real()) << ','
         << num(u(ix, k).imag()) << '\n';
    }
  }
  write_text(csv_path, os.str());
}

std::string report_to_json(const EstimateReport& r) {
  json j{{"estimate_id", to_string(r.id)},
         {"trials", r.trials},
         {"valid_trials", r.valid_trials},
         {"degenerate_trials", r.degenerate},
         {"sup_ratio", r.sup_ratio},
         {"mean_ratio", r.mean_ratio},
         {"seed", r.seed},
         {"params", params_json(r.params)},
         {"grid", r.grid}};
  return j.dump(2) + "\n";
}

void write_report(const EstimateReport& r, const std::filesystem::path& json_path) {
  write_text(json_path, report_to_json(r));
}

void write_trial_log(const EstimateReport& r, const std::filesystem::path& csv_path) {
  std::ostringstream os;
  os << "trial,label,lhs,rhs,ratio,valid\n";
  for (const auto& t : r.records) {
    os << t.index << ",\"" << t.label << "\"," << num(t.lhs) << ',' << num(t.rhs) << ',' << num(t.ratio) << ','
       << (t.valid ? 1 : 0) << '\n';
  }
  write_text(csv_path, os.str());
}

std::string solve_result_to_json(const SolveResult& res, const RunConfig& cfg) {
  json j{{"converged", res.converged},
         {"iterations", res.iterate_deltas.size()},
         {"iterate_deltas", res.iterate_deltas},
         {"iterate_norms", res.iterate_norms},
         {"residual_norm", res.residual_norm},
         {"data_norm", res.data_norm},
         {"boundary_error", res.boundary_error},
         {"initial_error", res.initial_error},
         {"under_resolved", res.u.under_resolved},
         {"params", params_json(cfg.params)},
         {"lambda", cfg.lambda},
         {"grid", {{"x_grid", grid_json(res.u.grid.x)}, {"t_grid", grid_json(res.u.grid.t)}}}};
  return j.dump(2) + "\n";
}

}  // namespace halfline
