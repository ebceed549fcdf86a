#pragma once

// Report serialization. The JSON layout is described in docs/report-schema.json.

#include <string>

#include "idealshi/campaign.hpp"
#include "json.hpp"

namespace idealshi {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json report_to_json(const Report& r);
/// Inverse of report_to_json. Throws PreconditionError on a schema mismatch.
Report report_from_json(const nlohmann::ordered_json& j);

std::string report_to_csv(const Report& r);
std::string report_to_pretty(const Report& r);

enum class ReportFormat { Json, Csv, Pretty };
std::string render_report(const Report& r, ReportFormat format);

}  // namespace idealshi
