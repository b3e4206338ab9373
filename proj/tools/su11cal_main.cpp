#include <deque>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "su11/session.hpp"

namespace {

using su11::SessionConfig;

void add_common_options(CLI::App* cmd, SessionConfig& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config file (flags override its fields)");
  cmd->add_option("-n,--n-particles", cfg.n_particles, "number of particles (>= 2)");
  cmd->add_option("-l,--lambda", cfg.lambda, "coupling, exact rational like 2 or 1/2");
  cmd->add_option("-d,--degree", cfg.degrees, "polynomial degree m (repeatable)");
  cmd->add_option("-w,--omega", cfg.omega, "oscillator frequency, positive rational");
  cmd->add_option("-e,--energy", cfg.energy, "coherent energy, exact scalar like 1/2+1/3*i");
  cmd->add_option("-t,--t", cfg.t_values, "time-eigenstate parameter t (repeatable, nonzero)");
  cmd->add_option("-k,--order", cfg.truncation_K, "truncation / scan order (>= 2)");
  cmd->add_option("-s,--seed", cfg.seed, "seed for the randomized scans");
  cmd->add_option("-o,--out", cfg.out_path, "output path, '-' for stdout");
  cmd->add_option("-f,--format", cfg.format, "report format: json or csv");
  cmd->add_option("--force-root", cfg.force_root,
                  "Casimir root injection: selected (default), plus, minus");
  cmd->add_flag("--compare-operator-order", cfg.compare_operator_order,
                "tabulate the swapped resolvent/T- composition");
}

int run_with_checks(SessionConfig cfg, const std::string& config_path,
                    const std::vector<std::string>& checks, const CLI::App* cmd) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file '" << config_path << "'\n";
      return 2;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config file is not valid JSON: " << e.what() << "\n";
      return 2;
    }
    SessionConfig file_cfg = su11::config_from_json(j);
    // Explicit command-line flags take precedence over file values.
    SessionConfig merged = file_cfg;
    if (cmd->count("--n-particles")) merged.n_particles = cfg.n_particles;
    if (cmd->count("--lambda")) merged.lambda = cfg.lambda;
    if (cmd->count("--degree")) merged.degrees = cfg.degrees;
    if (cmd->count("--omega")) merged.omega = cfg.omega;
    if (cmd->count("--energy")) merged.energy = cfg.energy;
    if (cmd->count("--t")) merged.t_values = cfg.t_values;
    if (cmd->count("--order")) merged.truncation_K = cfg.truncation_K;
    if (cmd->count("--seed")) merged.seed = cfg.seed;
    if (cmd->count("--out")) merged.out_path = cfg.out_path;
    if (cmd->count("--format")) merged.format = cfg.format;
    if (cmd->count("--force-root")) merged.force_root = cfg.force_root;
    if (cmd->count("--compare-operator-order"))
      merged.compare_operator_order = cfg.compare_operator_order;
    cfg = merged;
  }
  if (!checks.empty()) cfg.checks = checks;

  auto reports = su11::run_session(cfg);
  std::string payload = su11::emit_report(cfg, reports, cfg.format);
  su11::write_report(cfg, payload);
  return su11::worst_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su11cal: exact verification workbench for the su(1,1) structure of the "
               "rational Calogero model"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    std::vector<std::string> checks;
    SessionConfig cfg;
    std::string config_path;
  };
  std::deque<Sub> subs;  // stable element addresses for CLI11 bindings
  auto add_sub = [&](const std::string& name, const std::string& desc,
                     std::vector<std::string> checks) {
    subs.emplace_back();
    Sub& s = subs.back();
    s.cmd = app.add_subcommand(name, desc);
    s.checks = std::move(checks);
    add_common_options(s.cmd, s.cfg, s.config_path);
  };

  add_sub("algebra-check", "su(1,1) bracket and derivation-formula residuals", {"algebra"});
  add_sub("jastrow-check", "conjugated-Hamiltonian point checks", {"jastrow"});
  add_sub("kernel", "zero-energy kernel bases per degree", {"kernel"});
  add_sub("coherent", "coherent-state eigen-residuals and series cross-checks", {"coherent"});
  add_sub("time-op", "Casimir-root resolution, canonical commutator, time eigenstates",
          {"time-op"});
  add_sub("r-spectrum", "compact-sector vacuum, spectrum and ladder checks", {"r-sector"});
  add_sub("all", "every check (or the config file's list)", {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  for (auto& s : subs) {
    if (s.cmd->parsed()) {
      try {
        return run_with_checks(s.cfg, s.config_path, s.checks, s.cmd);
      } catch (const su11::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
      }
    }
  }
  std::cerr << "error: no subcommand selected\n";
  return 2;
}
