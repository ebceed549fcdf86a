#include <set>

#include "doctest.h"
#include "idealshi/arrangement.hpp"
#include "idealshi/charpoly.hpp"
#include "idealshi/errors.hpp"
#include "oracles.hpp"

using namespace idealshi;

namespace {

RootSystem make(const char* name) { return RootSystem::build(*RootSystemType::parse(name)); }

RootSubset subset_of(const RootSystem& rs, std::initializer_list<std::vector<int>> roots) {
  RootSubset s(rs.num_positive());
  for (const auto& c : roots) s.insert(*rs.index_of(Root{c}));
  return s;
}

std::set<std::vector<long>> as_set(const Arrangement& a) {
  std::set<std::vector<long>> out;
  for (const auto& h : a.hyperplanes()) {
    std::vector<long> v;
    for (const auto& x : h.entries()) v.push_back(x.get_si());
    out.insert(v);
  }
  return out;
}

Arrangement boolean3() { return Arrangement(3, {Covector::from_longs({1, 0, 0}), Covector::from_longs({0, 1, 0}),
                                                Covector::from_longs({0, 0, 1})}); }

Covector affine(const RootSystem&, std::vector<int> c, long j) { return affine_root_covector(Root{std::move(c)}, j); }

}  // namespace

TEST_CASE("covector normalization") {
  CHECK(Covector::from_longs({-2, 4, 0}) == Covector::from_longs({1, -2, 0}));
  CHECK_THROWS_AS(Covector::from_longs({0, 0}), PreconditionError);
  Arrangement a(2);
  CHECK(a.add(Covector::from_longs({1, 1})));
  CHECK_FALSE(a.add(Covector::from_longs({-3, -3})));
  CHECK(a.size() == 1);
}

TEST_CASE("Shi arrangement sizes") {
  const auto a2 = make("A2");
  CHECK(shi(a2, 1, RootSubset(3), Sign::Plus).size() == 7);
  CHECK(shi(a2, 1, RootSubset::all(3), Sign::Plus).size() == 10);
  const auto weyl = shi(a2, 1, RootSubset::all(3), Sign::Minus);
  CHECK(weyl.size() == 4);
  CHECK(weyl.contains(coning_covector(2)));
  for (const auto& r : a2.positive_roots()) CHECK(weyl.contains(affine_root_covector(r, 0)));
  CHECK_THROWS_AS(shi(a2, 0, RootSubset(3), Sign::Plus), PreconditionError);
}

TEST_CASE("Shi arrangements match the definition") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    const auto rs = make(name);
    for (long k = 1; k <= 2; ++k) {
      for (const auto& ideal : enumerate_ideals(rs)) {
        for (bool plus : {true, false}) {
          const auto a = shi(rs, k, ideal.members(), plus ? Sign::Plus : Sign::Minus);
          CHECK(as_set(a) == oracle::shi_by_definition(rs, k, ideal.members().bits(), plus));
          const long n = static_cast<long>(rs.num_positive());
          const long s = static_cast<long>(ideal.size());
          CHECK(static_cast<long>(a.size()) == 1 + 2 * k * n + (plus ? s : -s));
        }
      }
    }
  }
}

TEST_CASE("filtration steps") {
  const auto a2 = make("A2");
  const auto a1 = filtration_step(a2, 1);
  CHECK(a1.size() == 1);
  CHECK(a1.contains(coning_covector(2)));
  CHECK(filtration_step(a2, 4).same_set(shi(a2, 1, RootSubset::all(3), Sign::Minus)));
  CHECK(filtration_step(a2, 7).same_set(shi(a2, 1, RootSubset(3), Sign::Plus)));
  CHECK(filtration_step(a2, 10).same_set(shi(a2, 1, RootSubset::all(3), Sign::Plus)));
  CHECK(filtration_step(a2, 13).same_set(shi(a2, 2, RootSubset(3), Sign::Plus)));
  // Every completed round of 2n hyperplanes after the Weyl cone is a Shi or Catalan cone.
  for (const char* name : {"B2", "G2", "A3"}) {
    const auto rs = make(name);
    const long n = static_cast<long>(rs.num_positive());
    for (long k = 1; k <= 2; ++k) {
      CHECK(filtration_step(rs, 2 * k * n + 1).same_set(shi(rs, k, RootSubset(n), Sign::Plus)));
    }
  }
}

TEST_CASE("intersection lattice of small arrangements") {
  const auto lat = IntersectionLattice::build(boolean3());
  CHECK(lat.level_sizes() == std::vector<std::size_t>{1, 3, 3, 1});

  const auto a2 = make("A2");
  const auto weyl = shi(a2, 1, RootSubset::all(3), Sign::Minus);
  const auto wl = IntersectionLattice::build(weyl);
  // H_z meets each of the three Weyl planes in its own line; the Weyl planes share one line.
  CHECK(wl.level_sizes() == std::vector<std::size_t>{1, 4, 4, 1});
  std::size_t triple = 0;
  for (auto i : wl.level(2)) triple += wl.flat(i).hyperplanes.size() == 3;
  CHECK(triple == 1);

  const auto shi1 = IntersectionLattice::build(shi(a2, 1, RootSubset(3), Sign::Plus));
  CHECK(charpoly_from_lattice(shi1) == Polynomial::from_roots({1, 3, 3}));
}

TEST_CASE("flats are exactly the intersections of subsets") {
  // Brute-force every subset of the Weyl A2 cone plus one Shi plane.
  const auto a2 = make("A2");
  auto a = shi(a2, 1, RootSubset::all(3), Sign::Minus);
  a.add(affine(a2, {1, 0}, 1));
  a.add(affine(a2, {1, 1}, 1));
  const auto lat = IntersectionLattice::build(a);
  std::set<IntMatrix> brute;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    std::vector<Covector> forms;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1) forms.push_back(a[i]);
    brute.insert(Subspace::intersection(3, forms).basis());
  }
  std::set<IntMatrix> got;
  for (const auto& f : lat.flats()) got.insert(f.space.basis());
  CHECK(got == brute);
}

TEST_CASE("localization") {
  const auto a2 = make("A2");
  const auto a = shi(a2, 1, RootSubset(3), Sign::Plus);
  CHECK(localization(a, Subspace::whole(3)).size() == 0);
  const auto atom = Subspace::intersection(3, {a[0]});
  const auto loc = localization(a, atom);
  CHECK(loc.size() == 1);
  CHECK(loc.contains(a[0]));
  // A codim-2 flat inside H_z is the coning of a rank-2 root subsystem.
  const auto x = Subspace::intersection(3, {coning_covector(2), affine(a2, {1, 0}, 0)});
  const auto lx = localization(a, x);
  std::set<std::vector<long>> expected{{0, 0, 1}, {1, 0, 0}, {1, 0, -1}};
  CHECK(as_set(lx) == expected);
  CHECK_THROWS_AS(localization(a, Subspace::intersection(3, {Covector::from_longs({1, 2, 5})})), PreconditionError);
}

TEST_CASE("intersection counts") {
  const auto a2 = make("A2");
  const auto shi1 = shi(a2, 1, RootSubset(3), Sign::Plus);
  CHECK(intersection_count(shi1, affine(a2, {1, 0}, -1)) == 4);
  CHECK(intersection_count(shi1, affine(a2, {1, 1}, -1)) == 5);
  const auto plus1 = shi(a2, 1, subset_of(a2, {{1, 0}}), Sign::Plus);
  CHECK(intersection_count(plus1, affine(a2, {0, 1}, -1)) == 5);
}

TEST_CASE("restriction counts by point enumeration") {
  // |A cap H0| equals the number of distinct lines cut on H0; count with a
  // direct check of which pairs restrict to the same line.
  for (const char* name : {"A2", "B2", "G2"}) {
    const auto rs = make(name);
    for (long k = 1; k <= 2; ++k) {
      const auto a = shi(rs, k, RootSubset(rs.num_positive()), Sign::Plus);
      for (const auto& h0 : a.hyperplanes()) {
        std::vector<Covector> others;
        for (const auto& k2 : a.hyperplanes())
          if (!(k2 == h0)) others.push_back(k2);
        std::set<IntMatrix> lines;
        for (const auto& k2 : others) lines.insert(Subspace::intersection(3, {h0, k2}).basis());
        CHECK(intersection_count(a, h0) == lines.size());
      }
    }
  }
}

TEST_CASE("Ziegler multiplicities") {
  const auto a2 = make("A2");
  const auto z = ziegler_multiplicity(shi(a2, 1, subset_of(a2, {{1, 0}}), Sign::Plus), coning_covector(2));
  CHECK(z.arrangement.size() == 3);
  std::multiset<long> m(z.multiplicity.begin(), z.multiplicity.end());
  CHECK(m == std::multiset<long>{2, 2, 3});
  const auto w = ziegler_multiplicity(shi(a2, 1, RootSubset::all(3), Sign::Minus), coning_covector(2));
  CHECK(w.multiplicity == std::vector<long>{1, 1, 1});
  const auto b = ziegler_multiplicity(boolean3(), Covector::from_longs({0, 1, 0}));
  CHECK(b.arrangement.size() == 2);
  CHECK(b.multiplicity == std::vector<long>{1, 1});
  CHECK_THROWS_AS(ziegler_multiplicity(boolean3(), Covector::from_longs({1, 1, 0})), PreconditionError);
}
