#include <algorithm>
#include <set>

#include "doctest.h"
#include "idealshi/errors.hpp"
#include "idealshi/ideals.hpp"
#include "oracles.hpp"

using namespace idealshi;

namespace {

RootSystem make(const char* name) { return RootSystem::build(*RootSystemType::parse(name)); }

RootSubset subset_of(const RootSystem& rs, std::initializer_list<std::vector<int>> roots) {
  RootSubset s(rs.num_positive());
  for (const auto& c : roots) s.insert(*rs.index_of(Root{c}));
  return s;
}

}  // namespace

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Root{{1, 0}}, Root{{1, 1}}));
  CHECK_FALSE(dominance_leq(Root{{1, 0}}, Root{{0, 1}}));
  CHECK(dominance_leq(Root{{1, 1}}, Root{{3, 2}}));
}

TEST_CASE("is_ideal examples") {
  const auto a2 = make("A2");
  CHECK_FALSE(is_ideal(a2, subset_of(a2, {{1, 1}})));
  CHECK(is_ideal(a2, subset_of(a2, {{1, 0}, {0, 1}})));
  CHECK(is_ideal(a2, RootSubset(3)));
  CHECK_THROWS_AS(Ideal(a2, subset_of(a2, {{1, 1}})), PreconditionError);
}

TEST_CASE("ideal enumeration matches brute force") {
  const std::pair<const char*, long> table[] = {{"A2", 5},  {"B2", 6},  {"G2", 8},  {"A3", 14},
                                                {"B3", 20}, {"C3", 20}, {"A4", 42}, {"D4", 50}};
  for (const auto& [name, count] : table) {
    CAPTURE(name);
    const auto rs = make(name);
    const auto ideals = enumerate_ideals(rs);
    CHECK(static_cast<long>(ideals.size()) == count);
    CHECK(catalan_number(rs) == count);
    std::set<std::vector<bool>> got;
    for (const auto& i : ideals) got.insert(i.members().bits());
    const auto brute = oracle::ideals_by_brute_force(rs);
    CHECK(got == std::set<std::vector<bool>>(brute.begin(), brute.end()));
    for (std::size_t i = 1; i < ideals.size(); ++i) CHECK(ideals[i - 1].size() <= ideals[i].size());
  }
  CHECK(enumerate_ideals(make("F4")).size() == 105);
  CHECK(enumerate_ideals(make("B4")).size() == 70);
  CHECK_THROWS_AS(enumerate_ideals(make("F4"), 3), BoundExceeded);
}

TEST_CASE("ideal exponents") {
  const auto a2 = make("A2");
  CHECK(ideal_exponents(a2, Ideal::empty(a2)) == ExponentMultiset({0, 0}));
  CHECK(ideal_exponents(a2, Ideal::full(a2)) == ExponentMultiset({1, 2}));
  CHECK(ideal_exponents(a2, Ideal(a2, subset_of(a2, {{1, 0}}))) == ExponentMultiset({0, 1}));
  for (const char* name : {"A3", "B3", "G2", "F4"}) {
    const auto rs = make(name);
    for (const auto& i : enumerate_ideals(rs)) {
      std::vector<long> hs;
      for (auto r : i.members().indices()) hs.push_back(rs.root(r).height());
      CHECK(ideal_exponents(rs, i).parts == oracle::dual_partition(hs, rs.rank()));
      CHECK(ideal_exponents(rs, i).sum() == static_cast<long>(i.size()));
    }
  }
}

TEST_CASE("linear extension") {
  const auto a2 = make("A2");
  CHECK(linear_extension(a2).order == std::vector<std::size_t>{0, 1, 2});
  const auto b2 = make("B2");
  const auto order = linear_extension(b2).order;
  CHECK(b2.root(order[0]).height() == 1);
  CHECK(b2.root(order[1]).height() == 1);
  CHECK(b2.root(order[2]).height() == 2);
  CHECK(b2.root(order[3]).height() == 3);
  for (const char* name : {"A2", "B2", "G2", "B3", "F4"}) {
    const auto rs = make(name);
    const auto ext = linear_extension(rs).order;
    RootSubset prefix(rs.num_positive());
    CHECK(is_ideal(rs, prefix));
    for (auto i : ext) {
      prefix.insert(i);
      CHECK(is_ideal(rs, prefix));
    }
  }
}

TEST_CASE("localized ideals stay ideals") {
  const auto b3 = make("B3");
  RootSubset low(b3.num_positive());
  for (std::size_t i = 0; i < b3.num_positive(); ++i)
    if (b3.root(i).height() <= 2) low.insert(i);
  const Ideal height2(b3, low);
  bool saw_b2 = false;
  for (const auto& psi : rank_two_subsystems(b3)) {
    if (psi.roots().count() == 4) saw_b2 = true;
    CHECK(localize_ideal(Ideal::full(b3), psi) == psi.roots());
    CHECK(localize_ideal(Ideal::empty(b3), psi).empty());
    CHECK(psi.is_ideal(localize_ideal(height2, psi)));
  }
  CHECK(saw_b2);

  for (const char* name : {"A3", "B3", "C3", "A4", "D4", "B4"}) {
    CAPTURE(name);
    const auto rs = make(name);
    const auto subs = rank_two_subsystems(rs);
    for (const auto& ideal : enumerate_ideals(rs)) {
      for (const auto& psi : subs) CHECK(psi.is_ideal(localize_ideal(ideal, psi)));
    }
  }
}

TEST_CASE("rank-two subsystems") {
  // A3 has 4 A2 and 3 A1xA1 subsystems through pairs of roots.
  const auto a3 = make("A3");
  const auto subs = rank_two_subsystems(a3);
  std::size_t threes = 0, twos = 0;
  for (const auto& psi : subs) {
    if (psi.roots().count() == 3) ++threes;
    if (psi.roots().count() == 2) ++twos;
  }
  CHECK(threes == 4);
  CHECK(twos == 3);
  // The subsystem simple roots generate its roots with nonnegative coordinates.
  for (const auto& psi : subs) {
    for (auto i : psi.roots().indices()) {
      const auto [a, b] = psi.coordinates(i);
      CHECK(a >= 0);
      CHECK(b >= 0);
    }
  }
  const auto a2 = make("A2");
  CHECK_THROWS_AS(RankTwoSubsystem(a2, subset_of(a2, {{1, 0}, {0, 1}})), PreconditionError);
}
