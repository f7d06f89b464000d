#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "halfline/grid.hpp"
#include "halfline/norms.hpp"
#include "halfline/solver.hpp"
#include "halfline/verifier.hpp"

namespace halfline {

// Seed profiles for `solve`: phi(x) = amp S(x / ramp) e^{-(x - centre)^2 / width^2} and
// h(t) = amp t^2 e^{-t}, S the smooth step, so that both vanish to high order at the corner.
struct DataConfig {
  double phi_amplitude = 0.5;
  double phi_centre = 0.75;
  double phi_width = 0.25;
  double phi_ramp = 0.25;
  double h_amplitude = 5.0;
};

std::function<cplx(double)> seed_phi(const DataConfig& d);
std::function<cplx(double)> seed_h(const DataConfig& d);

struct RunConfig {
  std::size_t n_x = 512;
  std::size_t n_t = 512;
  double length_x = 64.0;
  double period_t = 4.0;  // t runs over [-period/2, period/2); the solve horizon is T = 1
  SobolevParams params;
  double delta = 0.25;
  double ramp_width = 1.0;
  double lambda = 0.1;
  double tolerance = 1e-10;
  std::size_t max_iter = 20;
  double eps0 = 1e-2;
  bool linear = false;
  std::uint64_t seed = 7;
  std::size_t trials = 50;
  std::size_t tube_trials = 20;
  std::vector<std::string> estimates{"bilinear_X"};
  std::string field;   // input for `norm`
  std::string out = "out";
  DataConfig data;

  // Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
  SpaceTimeGrid grid() const;
  CutoffConfig cutoff() const;
};

// Parses a JSON document; unknown keys are rejected.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const RunConfig& cfg);

// Field interchange: CSV rows (x_index, t_index, re, im) plus a JSON sidecar
// <path>.json holding the grid.
void write_field(const Field& u, const std::filesystem::path& csv_path);
Field read_field(const std::filesystem::path& csv_path);

// Slices for plotting: CSV rows (x, t, re, im) on every `stride`-th node.
void write_field_slices(const Field& u, const std::filesystem::path& csv_path, std::size_t stride);

std::string report_to_json(const EstimateReport& report);
void write_report(const EstimateReport& report, const std::filesystem::path& json_path);
void write_trial_log(const EstimateReport& report, const std::filesystem::path& csv_path);

std::string solve_result_to_json(const SolveResult& result, const RunConfig& cfg);

// Writes text to a file, replacing it; throws std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace halfline
