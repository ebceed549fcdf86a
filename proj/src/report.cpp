#include "idealshi/report.hpp"

#include <iomanip>
#include <sstream>

#include "idealshi/errors.hpp"

namespace idealshi {

using ojson = nlohmann::ordered_json;

ojson report_to_json(const Report& r) {
  ojson j;
  j["schema"] = "idealshi-report";
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = r.command;
  j["seed"] = r.seed;
  ojson summary;
  summary["cases"] = r.records.size();
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::NotFreeConfirmed, Verdict::Skipped}) {
    summary[to_string(v)] = r.count(v);
  }
  summary["unexpected"] = r.unexpected();
  j["summary"] = summary;
  ojson records = ojson::array();
  for (const auto& c : r.records) {
    ojson rec;
    rec["kind"] = c.kind;
    rec["type"] = c.type;
    if (c.k) rec["k"] = *c.k;
    if (c.subset) rec["subset"] = *c.subset;
    if (c.subset_is_ideal) rec["subset_is_ideal"] = *c.subset_is_ideal;
    if (c.sign) rec["sign"] = std::string(1, *c.sign);
    if (c.step) rec["step"] = *c.step;
    rec["arrangement_size"] = c.arrangement_size;
    if (c.predicted) rec["predicted_exponents"] = c.predicted->parts;
    rec["chi"] = c.chi;
    rec["verdict"] = to_string(c.verdict);
    rec["expected"] = c.expected;
    rec["detail"] = c.detail;
    if (c.elapsed_ms) rec["elapsed_ms"] = *c.elapsed_ms;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

Report report_from_json(const ojson& j) {
  try {
    if (j.at("schema").get<std::string>() != "idealshi-report") throw PreconditionError("not an idealshi report");
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw PreconditionError("unsupported report schema version");
    }
    Report r;
    r.command = j.at("command").get<std::string>();
    r.seed = j.at("seed").get<unsigned long>();
    for (const auto& rec : j.at("records")) {
      CaseRecord c;
      c.kind = rec.at("kind").get<std::string>();
      c.type = rec.at("type").get<std::string>();
      if (rec.contains("k")) c.k = rec["k"].get<long>();
      if (rec.contains("subset")) c.subset = rec["subset"].get<std::string>();
      if (rec.contains("subset_is_ideal")) c.subset_is_ideal = rec["subset_is_ideal"].get<bool>();
      if (rec.contains("sign")) c.sign = rec["sign"].get<std::string>().at(0);
      if (rec.contains("step")) c.step = rec["step"].get<long>();
      c.arrangement_size = rec.at("arrangement_size").get<std::size_t>();
      if (rec.contains("predicted_exponents")) {
        c.predicted = ExponentMultiset(rec["predicted_exponents"].get<std::vector<long>>());
      }
      c.chi = rec.at("chi").get<std::vector<std::string>>();
      const auto v = parse_verdict(rec.at("verdict").get<std::string>());
      if (!v) throw PreconditionError("unknown verdict in report");
      c.verdict = *v;
      c.expected = rec.at("expected").get<bool>();
      c.detail = rec.at("detail").get<std::string>();
      if (rec.contains("elapsed_ms")) c.elapsed_ms = rec["elapsed_ms"].get<double>();
      r.records.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string chi_text(const CaseRecord& c) {
  if (c.chi.empty()) return "";
  std::vector<BigInt> coeffs;
  for (const auto& s : c.chi) coeffs.emplace_back(s);
  return Polynomial(std::move(coeffs)).to_string();
}

}  // namespace

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "kind,type,k,subset,subset_is_ideal,sign,step,arrangement_size,predicted_exponents,chi,verdict,expected,"
        "detail,elapsed_ms\n";
  for (const auto& c : r.records) {
    os << c.kind << ',' << c.type << ',' << (c.k ? std::to_string(*c.k) : "") << ','
       << csv_field(c.subset.value_or("")) << ','
       << (c.subset_is_ideal ? (*c.subset_is_ideal ? "true" : "false") : "") << ','
       << (c.sign ? std::string(1, *c.sign) : "") << ',' << (c.step ? std::to_string(*c.step) : "") << ','
       << c.arrangement_size << ',' << csv_field(c.predicted ? c.predicted->to_string() : "") << ','
       << csv_field(join(c.chi, " ")) << ',' << to_string(c.verdict) << ',' << (c.expected ? "true" : "false") << ','
       << csv_field(c.detail) << ',';
    if (c.elapsed_ms) os << std::fixed << std::setprecision(3) << *c.elapsed_ms;
    os << '\n';
  }
  return os.str();
}

std::string report_to_pretty(const Report& r) {
  std::ostringstream os;
  os << "# " << r.command << '\n';
  for (const auto& c : r.records) {
    std::vector<std::string> label{c.type};
    if (c.k) label.push_back("k=" + std::to_string(*c.k));
    if (c.subset) label.push_back("S=" + *c.subset + (c.subset_is_ideal.value_or(false) ? " (ideal)" : ""));
    if (c.sign) label.push_back(std::string("sign=") + *c.sign);
    if (c.step) label.push_back("i=" + std::to_string(*c.step));
    os << std::left << std::setw(20) << to_string(c.verdict) << join(label, " ") << "  |A|=" << c.arrangement_size;
    if (c.predicted) os << "  exp=" << c.predicted->to_string();
    if (!c.chi.empty()) os << "  chi=" << chi_text(c);
    if (!c.detail.empty()) os << "  [" << c.detail << ']';
    if (c.elapsed_ms) os << "  " << std::fixed << std::setprecision(1) << *c.elapsed_ms << "ms";
    os << '\n';
  }
  os << "summary: " << r.records.size() << " cases, " << r.count(Verdict::Pass) << " PASS, "
     << r.count(Verdict::NotFreeConfirmed) << " NOT_FREE_CONFIRMED, " << r.count(Verdict::Skipped) << " SKIPPED, "
     << r.count(Verdict::Fail) << " FAIL, " << r.unexpected() << " unexpected\n";
  return os.str();
}

std::string render_report(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report_to_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return report_to_csv(r);
    case ReportFormat::Pretty: return report_to_pretty(r);
  }
  return {};
}

}  // namespace idealshi
