#include "idealshi/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <variant>

#include "idealshi/errors.hpp"
#include "idealshi/lattice_cache.hpp"
#include "idealshi/multiarr.hpp"

namespace idealshi {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotFreeConfirmed: return "NOT_FREE_CONFIRMED";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& s) {
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::NotFreeConfirmed, Verdict::Skipped}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

std::string to_string(Check c) {
  switch (c) {
    case Check::Terao: return "terao";
    case Check::Yoshinaga: return "yoshinaga";
    case Check::Duality: return "duality";
  }
  return "?";
}

std::optional<Check> parse_check(const std::string& s) {
  for (auto c : all_checks()) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::vector<Check> all_checks() { return {Check::Terao, Check::Yoshinaga, Check::Duality}; }

// ---------------------------------------------------------------------------
// SubsetSpec

SubsetSpec SubsetSpec::ideal(long index) {
  SubsetSpec s;
  s.kind = Kind::Ideal;
  s.ideal_index = index;
  return s;
}

SubsetSpec SubsetSpec::explicit_roots(std::vector<Root> roots) {
  SubsetSpec s;
  s.kind = Kind::Roots;
  s.roots = std::move(roots);
  return s;
}

std::string SubsetSpec::descriptor() const {
  if (kind == Kind::Ideal) return "ideal:" + std::to_string(ideal_index);
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ',';
    out += format_root(roots[i]);
  }
  return out + "}";
}

std::optional<SubsetSpec> parse_subset_option(const std::string& text, int rank) {
  if (text == "empty" || text.empty()) return SubsetSpec::explicit_roots({});
  std::vector<Root> roots;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = parse_root(item, rank);
    if (!r) return std::nullopt;
    roots.push_back(*r);
  }
  return SubsetSpec::explicit_roots(std::move(roots));
}

std::optional<SubsetSpec> SubsetSpec::parse_descriptor(const std::string& text, int rank) {
  if (text.rfind("ideal:", 0) == 0) {
    try {
      return SubsetSpec::ideal(std::stol(text.substr(6)));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
  const auto inner = text.substr(1, text.size() - 2);
  if (inner.empty()) return SubsetSpec::explicit_roots({});
  return parse_subset_option(inner, rank);
}

RootSubset resolve_subset(const RootSystem& rs, const SubsetSpec& spec, bool& is_ideal_out) {
  if (spec.kind == SubsetSpec::Kind::Ideal) {
    const auto ideals = enumerate_ideals(rs, rs.rank());
    if (spec.ideal_index < 0 || spec.ideal_index >= static_cast<long>(ideals.size())) {
      throw PreconditionError("ideal index " + std::to_string(spec.ideal_index) + " out of range for " +
                              rs.type().name() + " (" + std::to_string(ideals.size()) + " ideals)");
    }
    is_ideal_out = true;
    return ideals[static_cast<std::size_t>(spec.ideal_index)].members();
  }
  RootSubset s(rs.num_positive());
  for (const auto& r : spec.roots) {
    const auto idx = r.coeffs.size() == static_cast<std::size_t>(rs.rank()) ? rs.index_of(r) : std::nullopt;
    if (!idx) throw PreconditionError(format_root(r) + " is not a positive root of " + rs.type().name());
    s.insert(*idx);
  }
  is_ideal_out = is_ideal(rs, s);
  return s;
}

// ---------------------------------------------------------------------------
// Cases

Polynomial cached_charpoly(const Arrangement& a, const CampaignOptions& opts) {
  if (opts.cache) {
    if (auto hit = opts.cache->load(a)) return hit->chi;
  }
  const auto lattice = IntersectionLattice::build(a, opts.limits.lattice);
  Polynomial chi = charpoly_from_lattice(lattice);
  if (opts.cache) opts.cache->store(a, CachedLattice{chi, lattice.level_sizes()});
  return chi;
}

namespace {

bool has(const std::vector<Check>& checks, Check c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); }

Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

void verify_ideal_case(const RootSystem& rs, const VerificationCase& vc, const RootSubset& subset,
                       const Arrangement& a, const Polynomial& chi, CaseRecord& rec) {
  const auto predicted = shi_exponents_dp(rs, vc.k, subset, vc.sign);
  rec.predicted = predicted;
  std::vector<std::string> failures;
  if (has(vc.checks, Check::Terao) && !terao_check(chi, a.ambient_dim(), predicted).pass) {
    failures.push_back("chi does not equal prod (t - e_i) over the dual-partition exponents");
  }
  if (has(vc.checks, Check::Duality)) {
    auto shifted = shift_predict(ideal_exponents(rs, Ideal(rs, subset)), vc.k, rs.coxeter_number(), vc.sign);
    shifted.parts.insert(shifted.parts.begin(), 1);
    if (ExponentMultiset(shifted.parts) != predicted) {
      failures.push_back("dual-partition exponents " + predicted.to_string() + " differ from (1, kh +- m_i(I)) = " +
                         ExponentMultiset(shifted.parts).to_string());
    }
  }
  if (has(vc.checks, Check::Yoshinaga) && rs.rank() == 2) {
    const auto y = yoshinaga_check(a, coning_covector(rs.rank()));
    if (!y.free) {
      failures.push_back("rank-3 criterion says not free: chi0(0) = " + y.chi0_at_zero.get_str() +
                         " vs d1 d2 = " + std::to_string(y.ziegler.d1 * y.ziegler.d2));
    } else if (y.exponents != predicted) {
      failures.push_back("rank-3 criterion exponents " + y.exponents.to_string() + " differ from " +
                         predicted.to_string());
    }
  }
  rec.verdict = failures.empty() ? Verdict::Pass : Verdict::Fail;
  if (failures.empty()) {
    rec.detail = rs.rank() == 2 && has(vc.checks, Check::Yoshinaga) ? "free (rank-3 criterion), exponents match"
                                                                    : "chi splits with the predicted exponents";
  } else {
    for (std::size_t i = 0; i < failures.size(); ++i) rec.detail += (i ? "; " : "") + failures[i];
  }
  rec.expected = rec.verdict == Verdict::Pass;
}

void verify_rank2_subset(const RootSystem& rs, const VerificationCase& vc, const RootSubset& subset,
                         const Arrangement& a, const Polynomial& chi, CaseRecord& rec) {
  bool meets_simple = false;
  for (auto i : rs.simple_indices()) meets_simple = meets_simple || subset.contains(i);
  const bool claim_free = subset.empty() || meets_simple;
  const auto y = yoshinaga_check(a, coning_covector(rs.rank()));
  const std::string numbers =
      "chi0(0) = " + y.chi0_at_zero.get_str() + ", d1 d2 = " + std::to_string(y.ziegler.d1 * y.ziegler.d2);
  if (!y.free) {
    rec.verdict = claim_free ? Verdict::Fail : Verdict::NotFreeConfirmed;
    rec.detail = "not free: " + numbers;
    rec.expected = !claim_free;
    return;
  }
  Multiplicity indicator;
  const auto base = root_arrangement(rs, RootSubset::all(rs.num_positive()));
  for (std::size_t i = 0; i < rs.num_positive(); ++i) indicator.push_back(subset.contains(i) ? 1 : 0);
  const auto m = exp_rank2_multi(base, indicator);
  auto predicted = shift_predict(ExponentMultiset({m.d1, m.d2}), vc.k, rs.coxeter_number(), vc.sign);
  predicted.parts.insert(predicted.parts.begin(), 1);
  predicted = ExponentMultiset(predicted.parts);
  rec.predicted = predicted;
  const bool ok = claim_free && y.exponents == predicted && terao_check(chi, a.ambient_dim(), predicted).pass;
  rec.verdict = ok ? Verdict::Pass : Verdict::Fail;
  rec.expected = ok;
  rec.detail = "free: " + numbers + ", exponents " + y.exponents.to_string();
}

void verify_higher_subset(const RootSystem& rs, const VerificationCase& vc, const RootSubset& subset,
                          const Polynomial& chi, const CampaignOptions& opts, CaseRecord& rec) {
  rec.expected = true;
  const auto own = try_factor_exponents(chi);
  if (std::holds_alternative<FactorFailure>(own)) {
    rec.verdict = Verdict::NotFreeConfirmed;
    rec.detail = "chi does not split over nonnegative integers: " + std::get<FactorFailure>(own).residual.to_string();
    return;
  }
  const auto other_chi = cached_charpoly(shi(rs, vc.k, subset, opposite(vc.sign)), opts);
  const auto other = try_factor_exponents(other_chi);
  if (std::holds_alternative<FactorFailure>(other)) {
    rec.verdict = Verdict::Skipped;
    rec.detail = "inconclusive: chi splits but the opposite sign does not";
    return;
  }
  const long kh = vc.k * rs.coxeter_number();
  auto mine = std::get<ExponentMultiset>(own).parts;
  auto theirs = std::get<ExponentMultiset>(other).parts;
  // Drop the exponent 1 from each side and compare kh +- m_i.
  auto drop_one = [](std::vector<long>& v) {
    auto it = std::find(v.begin(), v.end(), 1L);
    if (it == v.end()) return false;
    v.erase(it);
    return true;
  };
  bool paired = drop_one(mine) && drop_one(theirs);
  if (paired) {
    std::vector<long> mirrored;
    for (long e : theirs) mirrored.push_back(2 * kh - e);
    std::sort(mirrored.begin(), mirrored.end());
    paired = mirrored == mine;
  }
  rec.predicted = std::get<ExponentMultiset>(own);
  if (paired) {
    rec.verdict = Verdict::Pass;
    rec.detail = "chi(+S) and chi(-S) split as a dual pair around kh";
  } else {
    rec.verdict = Verdict::Skipped;
    rec.detail = "inconclusive: both sides split but not as a dual pair";
  }
}

}  // namespace

CaseRecord run_case(const VerificationCase& vc, const CampaignOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CaseRecord rec;
  rec.kind = "verify";
  rec.type = vc.type.name();
  rec.k = vc.k;
  rec.subset = vc.subset.descriptor();
  rec.sign = sign_char(vc.sign);

  const int rank = vc.type.rank;
  const auto& lim = opts.limits;
  if (rank > lim.reduced_rank || (rank > lim.full_rank && vc.k > lim.reduced_max_k)) {
    rec.verdict = Verdict::Skipped;
    rec.detail = "bound: rank " + std::to_string(rank) + " with k = " + std::to_string(vc.k) +
                 " is outside the configured campaign limits";
    return rec;
  }
  try {
    const auto rs = RootSystem::build(vc.type);
    bool ideal = false;
    const auto subset = resolve_subset(rs, vc.subset, ideal);
    rec.subset_is_ideal = ideal;
    const auto a = shi(rs, vc.k, subset, vc.sign);
    rec.arrangement_size = a.size();
    const auto chi = cached_charpoly(a, opts);
    rec.chi = chi.coeff_strings();
    if (ideal) {
      verify_ideal_case(rs, vc, subset, a, chi, rec);
    } else if (rank == 2) {
      verify_rank2_subset(rs, vc, subset, a, chi, rec);
    } else {
      verify_higher_subset(rs, vc, subset, chi, opts, rec);
    }
  } catch (const BoundExceeded& e) {
    rec.verdict = Verdict::Skipped;
    rec.expected = true;
    rec.detail = std::string("bound: ") + e.what();
  }
  if (opts.timings) {
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

std::vector<VerificationCase> all_ideal_cases(const RootSystemType& type, long k, const std::vector<Sign>& signs,
                                              const std::vector<Check>& checks) {
  const auto rs = RootSystem::build(type);
  const auto count = enumerate_ideals(rs, rs.rank()).size();
  std::vector<VerificationCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    for (auto s : signs) out.push_back(VerificationCase{type, k, SubsetSpec::ideal(static_cast<long>(i)), s, checks});
  }
  return out;
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [v](const CaseRecord& r) { return r.verdict == v; }));
}

std::size_t Report::unexpected() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CaseRecord& r) { return !r.expected; }));
}

Report run_campaign(const std::string& command, const std::vector<VerificationCase>& cases,
                    const CampaignOptions& opts) {
  Report report;
  report.command = command;
  report.records.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) report.records[i] = run_case(cases[i], opts);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(cases.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

Report run_filtration(const RootSystemType& type, long steps, const CampaignOptions& opts) {
  if (steps < 1) throw PreconditionError("--steps must be at least 1");
  const auto rs = RootSystem::build(type);
  Report report;
  report.command = "filtration " + type.name() + " --steps " + std::to_string(steps);
  std::optional<Arrangement> previous;
  for (long i = 1; i <= steps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    CaseRecord rec;
    rec.kind = "filtration";
    rec.type = type.name();
    rec.step = i;
    const auto a = filtration_step(rs, i);
    rec.arrangement_size = a.size();
    std::vector<std::string> failures;
    if (a.size() != static_cast<std::size_t>(i)) failures.push_back("|A_i| != i");
    if (previous) {
      for (const auto& h : previous->hyperplanes()) {
        if (!a.contains(h)) {
          failures.push_back("A_{i-1} is not contained in A_i");
          break;
        }
      }
    }
    try {
      const auto predicted = filtration_exponents_dp(rs, i);
      rec.predicted = predicted;
      const auto chi = cached_charpoly(a, opts);
      rec.chi = chi.coeff_strings();
      if (!terao_check(chi, a.ambient_dim(), predicted).pass) failures.push_back("chi does not split as predicted");
      rec.verdict = failures.empty() ? Verdict::Pass : Verdict::Fail;
    } catch (const BoundExceeded& e) {
      rec.verdict = failures.empty() ? Verdict::Skipped : Verdict::Fail;
      failures.push_back(std::string("bound: ") + e.what());
    }
    for (std::size_t f = 0; f < failures.size(); ++f) rec.detail += (f ? "; " : "") + failures[f];
    if (rec.verdict == Verdict::Pass) rec.detail = "saturated, nested, chi splits as predicted";
    rec.expected = rec.verdict != Verdict::Fail;
    if (opts.timings) {
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    report.records.push_back(std::move(rec));
    previous = a;
  }
  return report;
}

}  // namespace idealshi
