#include "su11/session.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "su11/calogero.hpp"
#include "su11/dressed.hpp"
#include "su11/kernel.hpp"
#include "su11/radial.hpp"
#include "su11/rng.hpp"

namespace su11 {

const std::vector<std::string> kCheckOrder = {"algebra", "jastrow",  "kernel",
                                              "coherent", "time-op", "r-sector"};

namespace {

struct ParsedConfig {
  SessionConfig raw;
  SystemParams params;
  Rational omega;
  GaussScalar energy;
  std::vector<Rational> t_values;
};

ParsedConfig parse_config(const SessionConfig& c) {
  validate_config(c);
  ParsedConfig p{c, SystemParams::make(c.n_particles, Rational::parse(c.lambda)),
                 Rational::parse(c.omega), GaussScalar::parse(c.energy), {}};
  for (const auto& t : c.t_values) p.t_values.push_back(Rational::parse(t));
  return p;
}

void stamp(VerificationReport& rep, const ParsedConfig& p) {
  std::vector<std::pair<std::string, std::string>> head = {
      {"n_particles", std::to_string(p.raw.n_particles)}, {"lambda", p.raw.lambda}};
  rep.params.insert(rep.params.begin(), head.begin(), head.end());
}

Rational forced_root(const Weights& w, const std::string& mode) {
  if (mode == "plus") return w.plus_root();
  if (mode == "minus") return w.minus_root();
  return w.selected();
}

// ---- algebra -------------------------------------------------------------

std::vector<VerificationReport> run_algebra(const ParsedConfig& p) {
  std::vector<VerificationReport> out;
  std::vector<VerificationReport> bracket_parts;
  for (int m : p.raw.degrees) {
    InvariantBasis basis = invariant_basis(p.raw.n_particles, m);
    if (basis.elements.empty()) continue;
    VerificationReport r = check_su11_commutators(basis.elements, p.params);
    r.check = "m=" + std::to_string(m);
    bracket_parts.push_back(std::move(r));
  }
  VerificationReport brackets = merge_reports("algebra/su11-brackets", bracket_parts);
  brackets.notes = "all brackets computed exactly on the invariant bases";
  out.push_back(std::move(brackets));

  Rng rng(p.raw.seed + 101);
  std::vector<MultiPoly> pool;
  for (int m = 0; m <= 4; ++m) {
    InvariantBasis basis = invariant_basis(p.raw.n_particles, m);
    for (auto& e : basis.elements) pool.push_back(std::move(e));
  }
  std::vector<VerificationReport> formula_parts;
  for (int trial = 0; trial < 6; ++trial) {
    int deg = static_cast<int>(rng.int_in(1, 4));
    std::vector<GaussScalar> f;
    for (int j = 0; j <= deg; ++j) f.push_back(rng.gauss(4, 3));
    MultiPoly test = pool[static_cast<size_t>(rng.int_in(0, static_cast<long>(pool.size()) - 1))];
    VerificationReport r = check_commutator_formula(f, test, p.params);
    r.check = "trial " + std::to_string(trial);
    formula_parts.push_back(std::move(r));
  }
  out.push_back(merge_reports("algebra/derivation-formula", formula_parts));
  return out;
}

// ---- jastrow -------------------------------------------------------------

std::vector<Rational> random_distinct_point(Rng& rng, int n) {
  while (true) {
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(rng.rational(12, 4));
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pt[i] == pt[j]) {
          distinct = false;
          break;
        }
    if (distinct) return pt;
  }
}

std::vector<VerificationReport> run_jastrow(const ParsedConfig& p) {
  Rng rng(p.raw.seed + 202);
  const int points_per_function = 100;
  VerificationReport rep;
  rep.check = "jastrow/conjugation";
  int functions = 0, points = 0;
  for (int m = 0; m <= 4; ++m) {
    InvariantBasis basis = invariant_basis(p.raw.n_particles, m);
    for (size_t b = 0; b < basis.elements.size(); ++b) {
      ++functions;
      for (int k = 0; k < points_per_function; ++k) {
        auto pt = random_distinct_point(rng, p.raw.n_particles);
        VerificationReport one = jastrow_conjugation_check(basis.elements[b], pt, p.params);
        ++points;
        if (!one.passed()) {
          for (const auto& row : one.residuals)
            if (row.kind == "violation")
              rep.violation("m=" + std::to_string(m) + " basis[" + std::to_string(b) +
                                "] point " + std::to_string(k),
                            row.value);
        }
      }
    }
  }
  rep.notes = std::to_string(points) + " random rational points sampled over " +
              std::to_string(functions) + " invariant test functions (100 per function)";
  return {rep};
}

// ---- kernel ---------------------------------------------------------------

std::vector<VerificationReport> run_kernel(const ParsedConfig& p) {
  Rng rng(p.raw.seed + 303);
  SystemParams ref1 = SystemParams::make(p.raw.n_particles, rng.positive_rational(9, 7));
  SystemParams ref2 = SystemParams::make(p.raw.n_particles, rng.positive_rational(9, 7));

  std::vector<VerificationReport> parts;
  for (int m : p.raw.degrees) {
    VerificationReport r;
    r.check = "m=" + std::to_string(m);
    KernelBasis k = zero_energy_states(p.params, m);
    r.param("mu_" + std::to_string(m), k.mu.str());
    r.evidence("dimension", std::to_string(k.dimension()));
    for (int v = 0; v < k.dimension(); ++v)
      r.evidence("P[" + std::to_string(v) + "]", k.vectors[v].str());

    int generic_dim = std::max(zero_energy_states(ref1, m).dimension(),
                               zero_energy_states(ref2, m).dimension());
    if (k.dimension() > generic_dim)
      r.notes = "non-generic coupling: dimension exceeds the reference couplings (" +
                std::to_string(generic_dim) + ")";
    parts.push_back(std::move(r));
  }
  VerificationReport rep = merge_reports("kernel/zero-energy", parts);
  if (rep.notes.empty())
    rep.notes = "every kernel vector re-verified against T+ annihilation and the T0 eigenvalue";
  return {rep};
}

// ---- coherent --------------------------------------------------------------

std::vector<VerificationReport> run_coherent(const ParsedConfig& p) {
  std::vector<VerificationReport> out;
  for (int m : p.raw.degrees) {
    Weights w = Weights::from_mu(p.params.mu_of(m));
    ResolveOutcome res = resolve_mu_c(w, p.raw.truncation_K);
    res.report.check = "coherent/resolve-mu-c(m=" + std::to_string(m) + ")";
    out.push_back(res.report);

    CoherentOutcome c = coherent_state(p.energy, res.weights, p.raw.truncation_K);
    c.report.check = "coherent/eigenstate(m=" + std::to_string(m) + ")";
    out.push_back(c.report);
  }
  return out;
}

// ---- time-op ---------------------------------------------------------------

std::vector<VerificationReport> run_time_op(const ParsedConfig& p) {
  std::vector<VerificationReport> out;
  for (int m : p.raw.degrees) {
    Weights w = Weights::from_mu(p.params.mu_of(m));
    ResolveOutcome res = resolve_mu_c(w, p.raw.truncation_K);
    res.report.check = "time-op/resolve-mu-c(m=" + std::to_string(m) + ")";
    out.push_back(res.report);

    Rational root = forced_root(res.weights, p.raw.force_root);
    Weights used = res.weights;
    used.mu_c_selected = root;

    VerificationReport comm = check_canonical_commutator(used, p.raw.truncation_K);
    comm.check = "time-op/canonical-commutator(m=" + std::to_string(m) + ")";
    if (p.raw.force_root != "selected")
      comm.notes = "running with injected root '" + p.raw.force_root + "' = " + root.str();
    out.push_back(std::move(comm));

    for (size_t ti = 0; ti < p.t_values.size(); ++ti) {
      VerificationReport eig =
          time_eigenstate_residual(p.t_values[ti], used, p.raw.truncation_K);
      eig.check = "time-op/time-eigenstate(m=" + std::to_string(m) + ",t=" +
                  p.t_values[ti].str() + ")";
      out.push_back(std::move(eig));
    }

    if (p.raw.compare_operator_order) {
      VerificationReport ord;
      ord.check = "time-op/operator-order(m=" + std::to_string(m) + ")";
      const Rational& mu = used.mu;
      for (int a = 0; a <= 3; ++a) {
        Rational printed = -(Rational(1) / (mu - Rational(a) + root));
        Rational swapped = -(Rational(1) / (mu - Rational(a + 1) + root));
        ord.evidence("a=" + std::to_string(a),
                     "printed order coeff " + printed.str() + " vs swapped " + swapped.str());
      }
      ord.notes = "T^ = T- resolvent as printed; the swapped composition shifts every "
                  "denominator by one step";
      out.push_back(std::move(ord));
    }
  }
  return out;
}

// ---- r-sector ----------------------------------------------------------------

std::vector<VerificationReport> run_r_sector(const ParsedConfig& p) {
  std::vector<VerificationReport> out;
  const int n_max = p.raw.truncation_K;
  for (int m : p.raw.degrees) {
    Weights w = Weights::from_mu(p.params.mu_of(m));
    VacuumOutcome vac = build_r_vacuum(w, p.omega);
    vac.report.check = "r-sector/vacuum(m=" + std::to_string(m) + ")";
    out.push_back(vac.report);

    VerificationReport spectrum;
    spectrum.check = "r-sector/spectrum(m=" + std::to_string(m) + ")";
    spectrum.param("mu", w.mu.str());
    spectrum.param("omega", p.omega.str());
    for (int n = 0; n <= n_max; ++n) {
      VerificationReport lag = laguerre_eigenstate_check(n, w, p.omega);
      VerificationReport lad = ladder_states_check(n, w, p.omega);
      if (!lag.passed() || !lad.passed()) {
        for (const auto& row : lag.residuals)
          if (row.kind == "violation") spectrum.violation("laguerre n=" + std::to_string(n), row.value);
        for (const auto& row : lad.residuals)
          if (row.kind == "violation") spectrum.violation("ladder n=" + std::to_string(n), row.value);
      } else {
        spectrum.evidence("n=" + std::to_string(n), (Rational(n) - w.mu).str());
      }
    }
    spectrum.notes = "Laguerre and ladder families agree with exact scalar proportionality";
    out.push_back(std::move(spectrum));

    std::vector<GaussScalar> f_sq = {GaussScalar(0), GaussScalar(0), GaussScalar(1)};
    std::vector<GaussScalar> f_cube = {GaussScalar(0), GaussScalar(-1), GaussScalar(0),
                                       GaussScalar(1)};
    VerificationReport d1 = check_f_commutator_l(f_sq, LadderSign::Plus, w, p.omega, 8);
    d1.check = "r-sector/derivation-rule(m=" + std::to_string(m) + ",f=z^2,+)";
    out.push_back(std::move(d1));
    VerificationReport d2 = check_f_commutator_l(f_cube, LadderSign::Minus, w, p.omega, 8);
    d2.check = "r-sector/derivation-rule(m=" + std::to_string(m) + ",f=z^3-z,-)";
    out.push_back(std::move(d2));
  }
  return out;
}

}  // namespace

void validate_config(const SessionConfig& c) {
  auto field_fail = [](const std::string& field, const std::string& why) {
    fail(ErrorKind::ConfigError, field + ": " + why);
  };
  if (c.n_particles < 2) field_fail("n_particles", "must be >= 2");
  if (c.truncation_K < 2) field_fail("truncation_K", "must be >= 2");
  try {
    Rational::parse(c.lambda);
  } catch (const Error& e) {
    field_fail("lambda", e.what());
  }
  try {
    Rational omega = Rational::parse(c.omega);
    if (omega.sign() <= 0) field_fail("omega", "must be > 0");
  } catch (const Error& e) {
    field_fail("omega", e.what());
  }
  try {
    GaussScalar::parse(c.energy);
  } catch (const Error& e) {
    field_fail("energy", e.what());
  }
  for (const auto& t : c.t_values) {
    try {
      if (Rational::parse(t).is_zero()) field_fail("t_values", "t must be nonzero");
    } catch (const Error& e) {
      field_fail("t_values", e.what());
    }
  }
  for (int m : c.degrees)
    if (m < 0) field_fail("degrees", "degrees must be >= 0");
  for (const auto& name : c.checks) {
    if (std::find(kCheckOrder.begin(), kCheckOrder.end(), name) == kCheckOrder.end())
      field_fail("checks", "unknown check '" + name + "'");
  }
  if (c.format != "json" && c.format != "csv") field_fail("format", "must be json or csv");
  if (c.force_root != "selected" && c.force_root != "plus" && c.force_root != "minus")
    field_fail("force_root", "must be selected, plus or minus");
}

SessionConfig config_from_json(const nlohmann::json& j) {
  SessionConfig c;
  try {
    if (j.contains("n_particles")) c.n_particles = j.at("n_particles").get<int>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<std::string>();
    if (j.contains("degrees")) c.degrees = j.at("degrees").get<std::vector<int>>();
    if (j.contains("omega")) c.omega = j.at("omega").get<std::string>();
    if (j.contains("energy")) c.energy = j.at("energy").get<std::string>();
    if (j.contains("t_values")) c.t_values = j.at("t_values").get<std::vector<std::string>>();
    if (j.contains("truncation_K")) c.truncation_K = j.at("truncation_K").get<int>();
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out_path")) c.out_path = j.at("out_path").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("force_root")) c.force_root = j.at("force_root").get<std::string>();
    if (j.contains("compare_operator_order"))
      c.compare_operator_order = j.at("compare_operator_order").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ConfigError, std::string("malformed config: ") + e.what());
  }
  return c;
}

nlohmann::ordered_json config_to_json(const SessionConfig& c) {
  nlohmann::ordered_json j;
  j["n_particles"] = c.n_particles;
  j["lambda"] = c.lambda;
  j["degrees"] = c.degrees;
  j["omega"] = c.omega;
  j["energy"] = c.energy;
  j["t_values"] = c.t_values;
  j["truncation_K"] = c.truncation_K;
  j["checks"] = c.checks.empty() ? kCheckOrder : c.checks;
  j["seed"] = c.seed;
  j["out_path"] = c.out_path;
  j["format"] = c.format;
  j["force_root"] = c.force_root;
  j["compare_operator_order"] = c.compare_operator_order;
  return j;
}

std::vector<VerificationReport> run_session(const SessionConfig& config) {
  ParsedConfig p = parse_config(config);

  std::vector<std::string> wanted = config.checks.empty() ? kCheckOrder : config.checks;
  std::vector<VerificationReport> reports;
  for (const auto& name : kCheckOrder) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    std::vector<VerificationReport> group;
    try {
      if (name == "algebra") group = run_algebra(p);
      else if (name == "jastrow") group = run_jastrow(p);
      else if (name == "kernel") group = run_kernel(p);
      else if (name == "coherent") group = run_coherent(p);
      else if (name == "time-op") group = run_time_op(p);
      else if (name == "r-sector") group = run_r_sector(p);
    } catch (const Error& e) {
      VerificationReport err;
      err.check = name;
      err.status = VerificationReport::Status::Error;
      err.notes = e.what();
      group = {err};
    }
    for (auto& rep : group) {
      stamp(rep, p);
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

}  // namespace

std::string emit_report(const SessionConfig& config,
                        const std::vector<VerificationReport>& reports,
                        const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["session"] = config_to_json(config);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) checks.push_back(report_to_json(r));
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "check,status,location,kind,value\n";
    for (const auto& r : reports) {
      os << csv_escape(r.check) << "," << status_name(r.status) << ",-,summary,"
         << csv_escape(r.notes) << "\n";
      for (const auto& row : r.residuals) {
        os << csv_escape(r.check) << "," << status_name(r.status) << ","
           << csv_escape(row.location) << "," << row.kind << "," << csv_escape(row.value)
           << "\n";
      }
    }
    return os.str();
  }
  fail(ErrorKind::ConfigError, "format must be json or csv");
}

void write_report(const SessionConfig& config, const std::string& payload) {
  if (config.out_path == "-" || config.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::string path = config.out_path;
  const char* dir = std::getenv("SU11CAL_OUT_DIR");
  if (dir != nullptr && *dir != '\0' && path.front() != '/') {
    path = std::string(dir) + "/" + path;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << payload;
  if (!out) fail(ErrorKind::IoError, "short write to '" + path + "'");
}

int worst_exit_code(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == VerificationReport::Status::Error) return 2;
    if (r.status == VerificationReport::Status::Fail) code = std::max(code, 1);
  }
  return code;
}

}  // namespace su11
