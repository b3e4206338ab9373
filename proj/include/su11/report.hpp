#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace su11 {

/// One recorded residual or data row.
/// kind: "violation" rows decide failure; "evidence" rows document values
/// that are part of a passing check (spectra, kernel vectors, counter-
/// examples for rejected conventions); "defect" rows quantify an identity
/// that fails as printed by a known exact amount.
struct ResidualEntry {
  std::string location;
  std::string value;
  std::string kind = "violation";
};

/// Outcome of a sign/root resolution: the convention as printed vs. the
/// one the algebra actually selects, with the selection criterion.
struct ConventionNote {
  std::string quantity;
  std::string nominal;
  std::string selected;
  std::string criterion;
};

struct VerificationReport {
  enum class Status { Pass, Fail, Error };

  std::string check;
  Status status = Status::Pass;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ResidualEntry> residuals;
  std::vector<ConventionNote> conventions;
  std::optional<int> exact_through_order;  // empty = exact at all orders
  std::string notes;

  void param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }

  void evidence(const std::string& location, const std::string& value) {
    residuals.push_back({location, value, "evidence"});
  }

  void defect(const std::string& location, const std::string& value) {
    residuals.push_back({location, value, "defect"});
  }

  void violation(const std::string& location, const std::string& value) {
    residuals.push_back({location, value, "violation"});
    status = Status::Fail;
  }

  /// Records a residual that must be zero; marks failure when it is not.
  void require_zero(const std::string& location, bool is_zero, const std::string& value);

  bool passed() const { return status == Status::Pass; }
};

const char* status_name(VerificationReport::Status s);
VerificationReport::Status status_from_name(const std::string& name);

nlohmann::ordered_json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// Merges sub-reports into one named report; worst status wins and
/// locations are prefixed.
VerificationReport merge_reports(const std::string& check,
                                 const std::vector<VerificationReport>& parts);

}  // namespace su11
