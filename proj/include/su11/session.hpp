#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "su11/error.hpp"
#include "su11/report.hpp"

namespace su11 {

/// One verification session: system scalars, which checks to run, and how
/// results are written. All scalar fields are exact strings.
struct SessionConfig {
  int n_particles = 2;
  std::string lambda = "2";
  std::vector<int> degrees = {0, 1, 2, 3, 4};
  std::string omega = "1";
  std::string energy = "1";
  std::vector<std::string> t_values = {"1"};
  int truncation_K = 16;
  std::vector<std::string> checks;  // empty = every check
  std::uint64_t seed = 1;
  std::string out_path = "-";
  std::string format = "json";

  // Diagnostics: run with an injected Casimir root instead of the resolved
  // one ("selected" | "plus" | "minus"), and optionally tabulate the
  // swapped resolvent/T- operator order.
  std::string force_root = "selected";
  bool compare_operator_order = false;
};

extern const std::vector<std::string> kCheckOrder;

void validate_config(const SessionConfig& config);  // throws ConfigError

SessionConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const SessionConfig& config);

/// Runs the requested checks in the fixed order algebra, jastrow, kernel,
/// coherent, time-op, r-sector. Check-internal errors become reports with
/// error status; config errors throw.
std::vector<VerificationReport> run_session(const SessionConfig& config);

/// Serializes reports; byte-stable for identical inputs.
std::string emit_report(const SessionConfig& config,
                        const std::vector<VerificationReport>& reports,
                        const std::string& format);

/// Writes the payload to config.out_path ("-" = stdout). Relative paths
/// resolve against $SU11CAL_OUT_DIR when set.
void write_report(const SessionConfig& config, const std::string& payload);

/// 0 = all pass, 1 = at least one identity violation, 2 = error.
int worst_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace su11
