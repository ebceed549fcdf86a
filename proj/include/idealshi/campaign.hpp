#pragma once

// Verification campaigns over (type, k, subset, sign) grids.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idealshi/arrangement.hpp"
#include "idealshi/charpoly.hpp"
#include "idealshi/ideals.hpp"
#include "idealshi/rootsys.hpp"

namespace idealshi {

class LatticeCache;

enum class Verdict { Pass, Fail, NotFreeConfirmed, Skipped };
std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& s);

/// Which subset of positive roots a case refers to.
struct SubsetSpec {
  enum class Kind { Ideal, Roots };
  Kind kind = Kind::Roots;
  long ideal_index = 0;     // into enumerate_ideals(rs)
  std::vector<Root> roots;  // explicit list; empty means the empty set

  static SubsetSpec ideal(long index);
  static SubsetSpec explicit_roots(std::vector<Root> roots);
  /// "ideal:3", "{}", "{a1,a1+a2}".
  std::string descriptor() const;
  static std::optional<SubsetSpec> parse_descriptor(const std::string& text, int rank);
};

/// Parses the --subset syntax: "empty" or a comma-separated root list such as
/// "a1,a1+a2". Returns nullopt on a malformed or out-of-range root.
std::optional<SubsetSpec> parse_subset_option(const std::string& text, int rank);

enum class Check { Terao, Yoshinaga, Duality };
std::string to_string(Check c);
std::optional<Check> parse_check(const std::string& s);
std::vector<Check> all_checks();

struct VerificationCase {
  RootSystemType type;
  long k = 1;
  SubsetSpec subset;
  Sign sign = Sign::Plus;
  std::vector<Check> checks = all_checks();
};

struct CampaignLimits {
  /// Cases of rank <= full_rank run for every k.
  int full_rank = 3;
  /// Cases of rank <= reduced_rank run only for k <= reduced_max_k.
  int reduced_rank = 4;
  long reduced_max_k = 1;
  LatticeLimits lattice;
};

struct CaseRecord {
  std::string kind;  // "verify" or "filtration"
  std::string type;
  std::optional<long> k;
  std::optional<std::string> subset;
  std::optional<bool> subset_is_ideal;
  std::optional<char> sign;
  std::optional<long> step;
  std::size_t arrangement_size = 0;
  std::optional<ExponentMultiset> predicted;
  std::vector<std::string> chi;  // coefficients, lowest degree first
  Verdict verdict = Verdict::Skipped;
  bool expected = true;
  std::string detail;
  std::optional<double> elapsed_ms;
};

struct Report {
  std::string command;
  std::vector<CaseRecord> records;
  unsigned long seed = 0;

  std::size_t count(Verdict v) const;
  std::size_t unexpected() const;
};

struct CampaignOptions {
  CampaignLimits limits;
  unsigned jobs = 1;
  bool timings = false;
  const LatticeCache* cache = nullptr;
};

/// Resolves a subset spec against a root system. Sets `is_ideal`.
RootSubset resolve_subset(const RootSystem& rs, const SubsetSpec& spec, bool& is_ideal);

/// Expected verdicts: PASS for ideals; for other subsets in rank 2, free iff
/// the subset is empty or meets the simple roots; in higher rank, a
/// characteristic polynomial that does not split certifies non-freeness.
CaseRecord run_case(const VerificationCase& vc, const CampaignOptions& opts = {});

/// One case per ideal per sign.
std::vector<VerificationCase> all_ideal_cases(const RootSystemType& type, long k, const std::vector<Sign>& signs,
                                              const std::vector<Check>& checks = all_checks());

Report run_campaign(const std::string& command, const std::vector<VerificationCase>& cases,
                    const CampaignOptions& opts = {});

/// Rows i = 1..steps of the saturated filtration, each with its dual-partition
/// exponents and the Terao verdict; nesting and |A_i| = i are checked too.
Report run_filtration(const RootSystemType& type, long steps, const CampaignOptions& opts = {});

/// Characteristic polynomial through the cache when one is configured.
Polynomial cached_charpoly(const Arrangement& a, const CampaignOptions& opts);

}  // namespace idealshi
