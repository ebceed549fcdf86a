#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "idealshi/campaign.hpp"
#include "idealshi/errors.hpp"
#include "idealshi/lattice_cache.hpp"
#include "idealshi/report.hpp"

using namespace idealshi;

namespace {

RootSystemType type(const char* name) { return *RootSystemType::parse(name); }

VerificationCase subset_case(const char* name, long k, const char* subset, Sign sign) {
  return VerificationCase{type(name), k, *parse_subset_option(subset, type(name).rank), sign, all_checks()};
}

std::filesystem::path scratch_dir(const char* tag) {
  auto dir = std::filesystem::temp_directory_path() / (std::string("idealshi-test-") + tag);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("subset descriptors") {
  const auto s = parse_subset_option("a1,a1+a2", 2);
  REQUIRE(s);
  CHECK(s->descriptor() == "{a1,a1+a2}");
  CHECK(parse_subset_option("empty", 2)->roots.empty());
  CHECK_FALSE(parse_subset_option("a1,,a2", 2));
  CHECK_FALSE(parse_subset_option("a3", 2));
  CHECK(SubsetSpec::ideal(3).descriptor() == "ideal:3");
  CHECK(SubsetSpec::parse_descriptor("ideal:3", 2)->ideal_index == 3);
  CHECK(SubsetSpec::parse_descriptor("{a1,a1+a2}", 2)->roots.size() == 2);
  CHECK(SubsetSpec::parse_descriptor("{}", 2)->roots.empty());
}

TEST_CASE("A2 campaign over all ideals") {
  const auto r = run_campaign("t", all_ideal_cases(type("A2"), 1, {Sign::Plus, Sign::Minus}));
  CHECK(r.records.size() == 10);
  CHECK(r.count(Verdict::Pass) == 10);
  CHECK(r.unexpected() == 0);
}

TEST_CASE("non-free witness in A2") {
  const auto rec = run_case(subset_case("A2", 1, "a1+a2", Sign::Plus));
  CHECK(rec.verdict == Verdict::NotFreeConfirmed);
  CHECK(rec.expected);
  CHECK(rec.detail.find("13") != std::string::npos);
  CHECK(rec.detail.find("12") != std::string::npos);
  const auto free = run_case(subset_case("A2", 1, "a1,a1+a2", Sign::Minus));
  CHECK(free.verdict == Verdict::Pass);
  CHECK(free.predicted == ExponentMultiset({1, 2, 2}));
}

TEST_CASE("size guard") {
  const auto rec = run_case(VerificationCase{type("A4"), 2, SubsetSpec::ideal(0), Sign::Plus, all_checks()});
  CHECK(rec.verdict == Verdict::Skipped);
  CHECK(rec.expected);
  CHECK(rec.detail.rfind("bound", 0) == 0);
  CHECK_THROWS_AS(run_case(VerificationCase{type("A2"), 1, SubsetSpec::ideal(99), Sign::Plus, all_checks()}),
                  PreconditionError);
}

TEST_CASE("filtration report") {
  const auto r = run_filtration(type("A2"), 7);
  REQUIRE(r.records.size() == 7);
  CHECK(r.records[0].predicted == ExponentMultiset({0, 0, 1}));
  CHECK(r.records[6].predicted == ExponentMultiset({1, 3, 3}));
  CHECK(r.count(Verdict::Pass) == 7);
  CHECK_THROWS_AS(run_filtration(type("A2"), 0), PreconditionError);
}

TEST_CASE("reports are deterministic and independent of --jobs") {
  const auto cases = all_ideal_cases(type("B2"), 2, {Sign::Plus, Sign::Minus});
  CampaignOptions one, three;
  three.jobs = 3;
  const auto a = report_to_json(run_campaign("c", cases, one)).dump(2);
  const auto b = report_to_json(run_campaign("c", cases, three)).dump(2);
  const auto c = report_to_json(run_campaign("c", cases, one)).dump(2);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("json round trip") {
  CampaignOptions opts;
  opts.timings = true;
  auto r = run_campaign("rt", all_ideal_cases(type("G2"), 1, {Sign::Plus, Sign::Minus}), opts);
  r.records.push_back(run_case(subset_case("A2", 1, "a1+a2", Sign::Plus)));
  const auto j = report_to_json(r);
  const auto back = report_from_json(nlohmann::ordered_json::parse(j.dump()));
  CHECK(report_to_json(back) == j);
  CHECK(j["summary"]["cases"] == r.records.size());
  CHECK(j["records"][0]["chi"][0].is_string());
  auto bad = j;
  bad["schema_version"] = 99;
  CHECK_THROWS_AS(report_from_json(bad), PreconditionError);
}

TEST_CASE("csv and pretty output") {
  const auto r = run_campaign("csv", all_ideal_cases(type("A2"), 1, {Sign::Plus, Sign::Minus}));
  const auto csv = report_to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);
  CHECK(line.rfind("kind,type,k,", 0) == 0);
  while (std::getline(in, line)) ++rows;
  CHECK(rows == r.records.size());
  const auto pretty = report_to_pretty(r);
  CHECK(pretty.find("exp=(1,4,5)") != std::string::npos);
  CHECK(pretty.find("exp=(1,1,2)") != std::string::npos);
}

TEST_CASE("lattice cache") {
  const auto dir = scratch_dir("cache");
  LatticeCache cache(dir);
  const auto rs = RootSystem::build(type("B2"));
  const auto a = shi(rs, 1, RootSubset(4), Sign::Plus);
  CHECK_FALSE(cache.load(a));
  CampaignOptions opts;
  opts.cache = &cache;
  const auto chi = cached_charpoly(a, opts);
  REQUIRE(cache.load(a));
  CHECK(cache.load(a)->chi == chi);
  CHECK(cached_charpoly(a, opts) == chi);
  // A different arrangement with a colliding file must not be served.
  const auto other = shi(rs, 2, RootSubset(4), Sign::Plus);
  std::filesystem::copy_file(cache.path_for(a), cache.path_for(other));
  CHECK_FALSE(cache.load(other));
  std::filesystem::remove_all(dir);
}
