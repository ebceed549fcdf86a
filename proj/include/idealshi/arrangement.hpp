#pragma once

// Central hyperplane arrangements given by integer covectors.
//
// A hyperplane H^j_alpha = {alpha - j z = 0} is the covector
// (c_1, ..., c_l, -j) in the basis (alpha_1, ..., alpha_l, z), and
// H_z = (0, ..., 0, 1). Only the linear matroid of the covectors matters for
// everything computed here, so no inner product is ever needed.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idealshi/ideals.hpp"
#include "idealshi/linalg.hpp"
#include "idealshi/rootsys.hpp"

namespace idealshi {

/// A nonzero, primitive, sign-normalized integer linear form.
class Covector {
 public:
  /// Normalizes `entries`. Throws PreconditionError on the zero vector.
  explicit Covector(IntVector entries);
  static Covector from_longs(const std::vector<long>& entries);

  const IntVector& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }
  std::string to_string() const { return linalg::to_string(entries_); }

  friend bool operator==(const Covector&, const Covector&) = default;
  friend bool operator<(const Covector& a, const Covector& b) { return a.entries_ < b.entries_; }

 private:
  IntVector entries_;
};

/// Covector of H^j_alpha in (rank + 1) coordinates.
Covector affine_root_covector(const Root& alpha, long j);
Covector coning_covector(int rank);
/// Covector of H_alpha in rank coordinates.
Covector root_covector(const Root& alpha);

/// A deduplicated list of covectors in a fixed ambient dimension. Insertion
/// order is preserved.
class Arrangement {
 public:
  explicit Arrangement(std::size_t ambient_dim) : dim_(ambient_dim) {}
  Arrangement(std::size_t ambient_dim, const std::vector<Covector>& hyperplanes);

  /// Adds h unless already present; returns whether it was added.
  bool add(const Covector& h);
  bool contains(const Covector& h) const { return index_.count(key(h)) > 0; }
  std::optional<std::size_t> index_of(const Covector& h) const;

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Covector>& hyperplanes() const { return hyperplanes_; }
  const Covector& operator[](std::size_t i) const { return hyperplanes_[i]; }

  Arrangement without(std::size_t i) const;
  /// Same set of hyperplanes, ignoring order.
  bool same_set(const Arrangement& other) const;
  /// Sorted covector list; a canonical description of the set.
  std::vector<Covector> sorted() const;

 private:
  static std::string key(const Covector& h) { return h.to_string(); }

  std::size_t dim_;
  std::vector<Covector> hyperplanes_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// The cone of the k-extended Shi arrangement with H^{-k}_alpha added for
/// alpha in `subset`.
Arrangement shi_plus(const RootSystem& rs, long k, const RootSubset& subset);
/// The cone of the k-extended Shi arrangement with H^k_alpha removed for
/// alpha in `subset`.
Arrangement shi_minus(const RootSystem& rs, long k, const RootSubset& subset);
Arrangement shi(const RootSystem& rs, long k, const RootSubset& subset, Sign sign);
/// A(subset) = {H_alpha : alpha in subset} in rank coordinates.
Arrangement root_arrangement(const RootSystem& rs, const RootSubset& subset);

/// One hyperplane K_p of the saturated filtration: root index (into the
/// linear extension) and level j, meaning K_p = H^j_alpha.
struct FiltrationHyperplane {
  std::size_t root;
  long level;
};
FiltrationHyperplane filtration_hyperplane(const RootSystem& rs, const LinearExtension& order, long p);
/// A_i = {H_z, K_1, ..., K_{i-1}}.
Arrangement filtration_step(const RootSystem& rs, long i);
/// Dual partition of {z} together with the affine root vectors of K_1..K_{i-1}.
ExponentMultiset filtration_exponents_dp(const RootSystem& rs, long i);

/// A linear subspace of the ambient space, stored by a spanning set of
/// vectors in canonical row-echelon form.
class Subspace {
 public:
  static Subspace whole(std::size_t ambient_dim);
  /// The span of `vectors`.
  static Subspace span(std::size_t ambient_dim, IntMatrix vectors);
  /// The common zero set of the covectors.
  static Subspace intersection(std::size_t ambient_dim, const std::vector<Covector>& forms);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return dim_ - basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  bool inside(const Covector& h) const;
  Subspace meet(const Covector& h) const;
  std::size_t hash() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.dim_ == b.dim_ && a.basis_ == b.basis_; }

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

struct LatticeLimits {
  std::size_t max_hyperplanes = 256;
  std::size_t max_ambient_dim = 5;
  std::size_t max_flats = 2'000'000;
};

/// The intersection lattice L(A), graded by codimension, with Moebius values.
class IntersectionLattice {
 public:
  struct Flat {
    Subspace space;
    std::vector<std::size_t> hyperplanes;  // indices into the arrangement, ascending
    std::vector<std::size_t> covers;       // flats of codim one less containing this one
    BigInt mobius;
  };

  static IntersectionLattice build(const Arrangement& a, const LatticeLimits& limits = {});

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(std::size_t i) const { return flats_[i]; }
  /// Flat indices of codimension r.
  const std::vector<std::size_t>& level(std::size_t r) const { return levels_[r]; }
  std::size_t num_levels() const { return levels_.size(); }
  std::vector<std::size_t> level_sizes() const;
  std::optional<std::size_t> find(const Subspace& x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> levels_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> lookup_;
};

/// Hyperplanes of A containing x, as indices.
std::vector<std::size_t> hyperplanes_containing(const Arrangement& a, const Subspace& x);
/// True iff x is an intersection of hyperplanes of A.
bool in_lattice(const Arrangement& a, const Subspace& x);
/// A_X = {H in A : X subset of H}. Throws PreconditionError if X is not in L(A).
Arrangement localization(const Arrangement& a, const Subspace& x);

/// Canonical integer basis of the hyperplane h (rows span h).
IntMatrix hyperplane_basis(const Covector& h);
/// Covector of K restricted to h, written in the basis hyperplane_basis(h).
/// Returns nullopt when K = h.
std::optional<Covector> restrict_covector(const Covector& k, const IntMatrix& basis_of_h);

/// A cap H0 = {K cap H0 : K in A, K != H0}, an arrangement of dimension one
/// less. H0 need not belong to A.
Arrangement restriction(const Arrangement& a, const Covector& h0);
std::size_t intersection_count(const Arrangement& a, const Covector& h0);

struct ZieglerRestriction {
  Arrangement arrangement;
  std::vector<long> multiplicity;  // aligned with arrangement.hyperplanes()
};
/// Throws PreconditionError if H0 is not in A.
ZieglerRestriction ziegler_multiplicity(const Arrangement& a, const Covector& h0);

}  // namespace idealshi
