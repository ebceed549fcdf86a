// idealshi: command-line driver for the ideal-Shi verification library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealshi/arrangement.hpp"
#include "idealshi/campaign.hpp"
#include "idealshi/charpoly.hpp"
#include "idealshi/errors.hpp"
#include "idealshi/ideals.hpp"
#include "idealshi/lattice_cache.hpp"
#include "idealshi/report.hpp"
#include "idealshi/rootsys.hpp"
#include "json.hpp"

using namespace idealshi;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  long k = 0;
  std::string sign = "both";
  std::string subset;
  long ideal = -1;
  bool all_ideals = false;
  long steps = 0;
  unsigned jobs = 1;
  std::string format = "pretty";
  std::string out;
  std::string cache_dir;
  bool timings = false;
  std::vector<std::string> checks;
  std::string method = "mobius";
  int max_rank = -1;
};

RootSystemType parse_type(const std::string& text) {
  const auto t = RootSystemType::parse(text);
  if (!t) throw UsageError("invalid root system type '" + text + "'");
  return *t;
}

std::vector<Sign> parse_signs(const std::string& s) {
  if (s == "+" || s == "plus") return {Sign::Plus};
  if (s == "-" || s == "minus") return {Sign::Minus};
  if (s == "both" || s == "+-" || s == "pm") return {Sign::Plus, Sign::Minus};
  throw UsageError("--sign must be +, - or both");
}

Sign single_sign(const Options& o) {
  const auto signs = parse_signs(o.sign == "both" ? "+" : o.sign);
  return signs.front();
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "pretty") return ReportFormat::Pretty;
  throw UsageError("--format must be json, csv or pretty");
}

/// Subset from --subset or --ideal; the empty set when neither is given.
SubsetSpec subset_from(const Options& o, int rank) {
  if (!o.subset.empty() && o.ideal >= 0) throw UsageError("--subset and --ideal are mutually exclusive");
  if (o.ideal >= 0) return SubsetSpec::ideal(o.ideal);
  if (o.subset.empty()) return SubsetSpec::explicit_roots({});
  const auto s = parse_subset_option(o.subset, rank);
  if (!s) throw UsageError("malformed --subset '" + o.subset + "'");
  return *s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

std::unique_ptr<LatticeCache> open_cache(const Options& o) {
  std::string dir = o.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("IDEALSHI_CACHE")) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<LatticeCache>(dir);
}

std::string root_list(const RootSystem& rs, const RootSubset& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    out += (first ? "" : ",") + format_root(rs.root(i));
    first = false;
  }
  return out + "}";
}

int cmd_roots(const Options& o) {
  const auto rs = RootSystem::build(parse_type(o.type));
  if (o.format == "json") {
    ojson j;
    j["type"] = rs.type().name();
    j["coxeter_number"] = rs.coxeter_number();
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
      rows.push_back({{"index", i}, {"root", format_root(rs.root(i))}, {"height", rs.root(i).height()}});
    }
    j["roots"] = rows;
    emit(o, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "# " << rs.type().name() << ": " << rs.num_positive() << " positive roots, h = " << rs.coxeter_number()
     << '\n';
  for (std::size_t i = 0; i < rs.num_positive(); ++i) {
    os << i << '\t' << format_root(rs.root(i)) << '\t' << rs.root(i).height() << '\n';
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_ideals(const Options& o) {
  const auto rs = RootSystem::build(parse_type(o.type));
  const int bound = o.max_rank > 0 ? o.max_rank : 4;
  const auto ideals = enumerate_ideals(rs, bound);
  if (o.format == "json") {
    ojson j;
    j["type"] = rs.type().name();
    j["count"] = ideals.size();
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      rows.push_back({{"index", i},
                      {"roots", root_list(rs, ideals[i].members())},
                      {"exponents", ideal_exponents(rs, ideals[i]).parts}});
    }
    j["ideals"] = rows;
    emit(o, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "# " << rs.type().name() << ": " << ideals.size() << " ideals\n";
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    os << i << '\t' << ideals[i].size() << '\t' << root_list(rs, ideals[i].members()) << '\t'
       << ideal_exponents(rs, ideals[i]).to_string() << '\n';
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_exponents(const Options& o) {
  const auto rs = RootSystem::build(parse_type(o.type));
  std::ostringstream os;
  if (o.k <= 0) {
    os << rs.type().name() << " Weyl exponents " << weyl_exponents(rs).to_string() << '\n';
    emit(o, os.str());
    return kExitOk;
  }
  bool ideal = false;
  const auto spec = subset_from(o, rs.rank());
  const auto subset = resolve_subset(rs, spec, ideal);
  ojson j;
  j["type"] = rs.type().name();
  j["k"] = o.k;
  j["subset"] = spec.descriptor();
  j["subset_is_ideal"] = ideal;
  for (auto s : parse_signs(o.sign)) {
    const auto e = shi_exponents_dp(rs, o.k, subset, s);
    j[std::string("exponents") + sign_char(s)] = e.parts;
    os << "Shi^" << o.k << "_" << sign_char(s) << spec.descriptor() << " (" << rs.type().name() << ") "
       << e.to_string() << '\n';
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return kExitOk;
}

int cmd_charpoly(const Options& o) {
  const auto rs = RootSystem::build(parse_type(o.type));
  if (o.k < 1) throw UsageError("charpoly needs -k >= 1");
  bool ideal = false;
  const auto spec = subset_from(o, rs.rank());
  const auto subset = resolve_subset(rs, spec, ideal);
  const auto a = shi(rs, o.k, subset, single_sign(o));
  const auto cache = open_cache(o);
  CampaignOptions opts;
  opts.cache = cache.get();
  Polynomial chi;
  if (o.method == "mobius") {
    chi = cached_charpoly(a, opts);
  } else if (o.method == "whitney") {
    chi = charpoly_whitney(a);
  } else if (o.method == "finite-field") {
    chi = charpoly_finite_field_checked(a).poly;
  } else {
    throw UsageError("--method must be mobius, whitney or finite-field");
  }
  const auto factored = try_factor_exponents(chi);
  ojson j;
  j["type"] = rs.type().name();
  j["k"] = o.k;
  j["subset"] = spec.descriptor();
  j["sign"] = std::string(1, sign_char(single_sign(o)));
  j["arrangement_size"] = a.size();
  j["chi"] = chi.coeff_strings();
  std::ostringstream os;
  os << "|A| = " << a.size() << "\nchi(t) = " << chi.to_string() << '\n';
  if (const auto* e = std::get_if<ExponentMultiset>(&factored)) {
    j["exponents"] = e->parts;
    os << "splits with exponents " << e->to_string() << '\n';
  } else {
    j["exponents"] = nullptr;
    os << "does not split over nonnegative integers\n";
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return kExitOk;
}

CampaignOptions campaign_options(const Options& o, const LatticeCache* cache) {
  CampaignOptions opts;
  opts.jobs = o.jobs;
  opts.timings = o.timings;
  opts.cache = cache;
  if (o.max_rank > 0) {
    opts.limits.full_rank = o.max_rank;
    opts.limits.reduced_rank = std::max(opts.limits.reduced_rank, o.max_rank);
  }
  return opts;
}

int finish(const Options& o, const Report& r) {
  emit(o, render_report(r, parse_format(o.format)));
  return r.unexpected() == 0 ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o) {
  const auto type = parse_type(o.type);
  if (o.k < 1) throw UsageError("verify needs -k >= 1");
  const auto signs = parse_signs(o.sign);
  std::vector<Check> checks;
  for (const auto& c : o.checks) {
    const auto parsed = parse_check(c);
    if (!parsed) throw UsageError("unknown check '" + c + "'");
    checks.push_back(*parsed);
  }
  if (checks.empty()) checks = all_checks();
  if (o.all_ideals && (!o.subset.empty() || o.ideal >= 0)) {
    throw UsageError("--all-ideals excludes --subset and --ideal");
  }
  if (!o.all_ideals && o.subset.empty() && o.ideal < 0) {
    throw UsageError("verify needs --all-ideals, --subset or --ideal");
  }
  std::vector<VerificationCase> cases;
  if (o.all_ideals) {
    cases = all_ideal_cases(type, o.k, signs, checks);
  } else {
    const auto spec = subset_from(o, type.rank);
    for (auto s : signs) cases.push_back(VerificationCase{type, o.k, spec, s, checks});
  }
  std::string command = "verify " + type.name() + " -k " + std::to_string(o.k);
  if (o.all_ideals) command += " --all-ideals";
  if (!o.subset.empty()) command += " --subset " + o.subset;
  if (o.ideal >= 0) command += " --ideal " + std::to_string(o.ideal);
  command += " --sign " + o.sign;
  const auto cache = open_cache(o);
  return finish(o, run_campaign(command, cases, campaign_options(o, cache.get())));
}

int cmd_filtration(const Options& o) {
  const auto type = parse_type(o.type);
  if (o.steps < 1) throw UsageError("--steps must be at least 1");
  const auto cache = open_cache(o);
  return finish(o, run_filtration(type, o.steps, campaign_options(o, cache.get())));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal-Shi arrangements: construction and exact verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("type", o.type, "Root system type, e.g. A2, B3, G2")->required();
    sub->add_option("--format", o.format, "Output format: json, csv or pretty");
    sub->add_option("--out", o.out, "Write output to a file instead of stdout");
  };
  auto add_case = [&o](CLI::App* sub) {
    sub->add_option("-k", o.k, "Shi parameter k >= 1");
    sub->add_option("--sign", o.sign, "+, - or both");
    sub->add_option("--subset", o.subset, "Comma-separated positive roots, e.g. a1,a1+a2; 'empty' for none");
    sub->add_option("--ideal", o.ideal, "Index into the ideal list printed by 'ideals'");
  };
  auto add_campaign = [&o](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Cases to run in parallel")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", o.cache_dir, "Lattice cache directory (default: $IDEALSHI_CACHE)");
    sub->add_flag("--timings", o.timings, "Record per-case wall time in the report");
    sub->add_option("--max-rank", o.max_rank, "Lift the size guard: ranks up to this run for every k");
  };

  auto* roots = app.add_subcommand("roots", "List positive roots in canonical order with heights");
  add_common(roots);

  auto* ideals = app.add_subcommand("ideals", "List the ideals of the root poset with their exponents");
  add_common(ideals);
  ideals->add_option("--max-rank", o.max_rank, "Refuse ranks above this bound (default 4)");

  auto* exponents = app.add_subcommand("exponents", "Weyl exponents, or dual-partition exponents of Shi^k");
  add_common(exponents);
  add_case(exponents);

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of Shi^k_{+-S}");
  add_common(charpoly);
  add_case(charpoly);
  charpoly->add_option("--method", o.method, "mobius, whitney or finite-field");
  charpoly->add_option("--cache-dir", o.cache_dir, "Lattice cache directory (default: $IDEALSHI_CACHE)");

  auto* verify = app.add_subcommand("verify", "Run the verification matrix and emit a report");
  add_common(verify);
  add_case(verify);
  add_campaign(verify);
  verify->add_flag("--all-ideals", o.all_ideals, "One case per ideal");
  verify->add_option("--checks", o.checks, "Subset of terao, yoshinaga, duality")->delimiter(',');

  auto* filtration = app.add_subcommand("filtration", "Walk the saturated filtration and check each step");
  add_common(filtration);
  add_campaign(filtration);
  filtration->add_option("--steps", o.steps, "Number of steps N >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    if (sub == roots) return cmd_roots(o);
    if (sub == ideals) return cmd_ideals(o);
    if (sub == exponents) return cmd_exponents(o);
    if (sub == charpoly) return cmd_charpoly(o);
    if (sub == verify) return cmd_verify(o);
    if (sub == filtration) return cmd_filtration(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
