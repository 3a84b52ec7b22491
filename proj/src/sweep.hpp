#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dstas {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SweepVariable { xi, p_max_db, interference_limit };
enum class SweepMetric { mi, outage };

struct SweepSpec {
  SweepVariable variable = SweepVariable::xi;
  double start = 0.1;
  double stop = 100.0;
  int num_points = 13;
  bool log_spacing = true;
  std::vector<std::string> systems;
  SweepMetric metric = SweepMetric::mi;
  // fixed scenario fields; xi applies when it is not the sweep variable,
  // same for pmax_db / wp_db. dB fields convert to linear at the boundary.
  int antennas = 2;
  double xi = 1.0;
  double mean_gain_p = 1.0;
  double noise = 1.0;
  double r0 = 1.0;
  double pmax_db = 0.0;
  double wp_db = 0.0;
  long long trials = 100000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string preset;  // empty when assembled from explicit fields

  void validate() const;
};

/// One emitted CSV record.
struct SweepRecord {
  std::string sweep_variable;
  double value = 0.0;
  std::string system;
  double delta = 0.0;
  bool has_delta = false;
  double p_s = 0.0;
  bool has_p_s = false;
  std::string metric_name;
  double metric_value = 0.0;
  double stderr_value = 0.0;
  bool has_stderr = false;  // false for analytic rows
  long long trials = 0;
  std::uint64_t seed = 0;
  bool is_simulated = false;
};

/// Parse line-oriented "key=value" text ('#' starts a comment).
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Build a spec from key=value text; a "preset=figN" key loads that preset's
/// defaults first, then remaining keys override.
SweepSpec parse_sweep_spec(const std::string& text);

std::vector<double> sweep_values(const SweepSpec& spec);

std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Run and write CSV (exact schema header); for presets also emits a
/// gnuplot companion script next to the CSV.
void run_sweep_to_csv(const SweepSpec& spec, const std::string& output_path);

}  // namespace dstas
