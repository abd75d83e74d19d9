#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "wss/lattice.hpp"
#include "wss/verification.hpp"

namespace wss {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportOptions {
  bool timing = false;  // wall-clock times break byte-for-byte reproducibility
};

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json report_to_json(const VerificationRun& run, const ReportOptions& opt = {});
void write_json(std::ostream& out, const VerificationRun& run, const ReportOptions& opt = {});
/// One row per verdict, header first.
void write_csv(std::ostream& out, const VerificationRun& run);

/// Inclusion diagram with one node per conjugacy class, labelled
/// "order×class size"; edges join classes related by maximal inclusion.
void write_lattice_dot(std::ostream& out, const SubgroupLattice& l, const std::string& name);

}  // namespace wss
