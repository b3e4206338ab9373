#include "su11/report.hpp"

#include "su11/error.hpp"

namespace su11 {

void VerificationReport::require_zero(const std::string& location, bool is_zero,
                                      const std::string& value) {
  if (!is_zero) violation(location, value);
}

const char* status_name(VerificationReport::Status s) {
  switch (s) {
    case VerificationReport::Status::Pass: return "pass";
    case VerificationReport::Status::Fail: return "fail";
    case VerificationReport::Status::Error: return "error";
  }
  return "error";
}

VerificationReport::Status status_from_name(const std::string& name) {
  if (name == "pass") return VerificationReport::Status::Pass;
  if (name == "fail") return VerificationReport::Status::Fail;
  if (name == "error") return VerificationReport::Status::Error;
  fail(ErrorKind::ConfigError, "unknown status '" + name + "'");
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = status_name(r.status);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : r.residuals) {
    nlohmann::ordered_json row;
    row["location"] = e.location;
    row["value"] = e.value;
    row["kind"] = e.kind;
    rows.push_back(row);
  }
  j["residuals"] = rows;
  nlohmann::ordered_json conv = nlohmann::ordered_json::array();
  for (const auto& c : r.conventions) {
    nlohmann::ordered_json row;
    row["quantity"] = c.quantity;
    row["nominal"] = c.nominal;
    row["selected"] = c.selected;
    row["criterion"] = c.criterion;
    conv.push_back(row);
  }
  j["conventions"] = conv;
  if (r.exact_through_order.has_value()) {
    j["exact_through_order"] = *r.exact_through_order;
  } else {
    j["exact_through_order"] = "exact";
  }
  j["notes"] = r.notes;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.check = j.at("check").get<std::string>();
  r.status = status_from_name(j.at("status").get<std::string>());
  for (const auto& [k, v] : j.at("params").items())
    r.params.emplace_back(k, v.get<std::string>());
  for (const auto& row : j.at("residuals"))
    r.residuals.push_back({row.at("location").get<std::string>(),
                           row.at("value").get<std::string>(),
                           row.at("kind").get<std::string>()});
  for (const auto& row : j.at("conventions"))
    r.conventions.push_back({row.at("quantity").get<std::string>(),
                             row.at("nominal").get<std::string>(),
                             row.at("selected").get<std::string>(),
                             row.at("criterion").get<std::string>()});
  const auto& order = j.at("exact_through_order");
  if (order.is_number_integer()) r.exact_through_order = order.get<int>();
  r.notes = j.at("notes").get<std::string>();
  return r;
}

VerificationReport merge_reports(const std::string& check,
                                 const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.check = check;
  for (const auto& p : parts) {
    if (static_cast<int>(p.status) > static_cast<int>(out.status)) out.status = p.status;
    for (const auto& kv : p.params) out.params.push_back(kv);
    for (const auto& e : p.residuals)
      out.residuals.push_back({p.check + "/" + e.location, e.value, e.kind});
    for (const auto& c : p.conventions) out.conventions.push_back(c);
    if (p.exact_through_order.has_value()) {
      if (!out.exact_through_order.has_value() ||
          *p.exact_through_order < *out.exact_through_order)
        out.exact_through_order = *p.exact_through_order;
    }
    if (!p.notes.empty()) {
      if (!out.notes.empty()) out.notes += "; ";
      out.notes += p.notes;
    }
  }
  return out;
}

}  // namespace su11
