#pragma once

// The root poset (dominance order) and its order ideals.

#include <cstddef>
#include <vector>

#include "idealshi/rootsys.hpp"

namespace idealshi {

/// beta <= alpha iff alpha - beta has nonnegative simple-root coefficients.
bool dominance_leq(const Root& beta, const Root& alpha);

bool is_ideal(const RootSystem& rs, const RootSubset& s);

/// A downward-closed set of positive roots.
class Ideal {
 public:
  /// Throws PreconditionError if `members` is not downward closed.
  Ideal(const RootSystem& rs, RootSubset members);
  static Ideal empty(const RootSystem& rs);
  static Ideal full(const RootSystem& rs);

  const RootSubset& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  struct Trusted {};
  Ideal(RootSubset members, Trusted) : members_(std::move(members)) {}
  friend std::vector<Ideal> enumerate_ideals(const RootSystem&, int);

  RootSubset members_;
};

/// Weyl-Catalan number prod (e_i + h + 1) / (e_i + 1).
long catalan_number(const RootSystem& rs);

/// All ideals, sorted by (size, bitset). Throws BoundExceeded when the rank
/// exceeds `max_rank`, and InvariantViolation if the count disagrees with
/// catalan_number.
std::vector<Ideal> enumerate_ideals(const RootSystem& rs, int max_rank = 4);

/// p_i = number of roots of height i in the subset, for 1 <= i <= h.
std::vector<long> height_profile(const RootSystem& rs, const RootSubset& s);

/// Dual partition of the heights in I with d = rank.
ExponentMultiset ideal_exponents(const RootSystem& rs, const Ideal& ideal);

/// A permutation of the positive roots whose every prefix is an ideal.
struct LinearExtension {
  std::vector<std::size_t> order;
};

/// The canonical root order: by height, then decreasing lex on coefficients.
LinearExtension linear_extension(const RootSystem& rs);

/// The positive roots of a rank-2 localization of A(Phi+): all positive roots
/// lying in the span of two independent roots, with the simple system of that
/// rank-2 subsystem.
class RankTwoSubsystem {
 public:
  /// Throws PreconditionError unless `roots` is exactly Phi+ intersected with a
  /// 2-dimensional span of roots.
  RankTwoSubsystem(const RootSystem& rs, RootSubset roots);

  const RootSubset& roots() const { return roots_; }
  std::size_t simple(int which) const { return simple_[which]; }
  /// Coordinates (a, b) of root i with root_i = a*simple(0) + b*simple(1).
  std::pair<long, long> coordinates(std::size_t i) const;
  /// beta <= alpha in the subsystem's own dominance order.
  bool leq(std::size_t beta, std::size_t alpha) const;
  bool is_ideal(const RootSubset& s) const;

 private:
  const RootSystem* rs_;
  RootSubset roots_;
  std::size_t simple_[2] = {0, 0};
};

/// Every rank-2 localization of A(Phi+), deduplicated, in a deterministic
/// order.
std::vector<RankTwoSubsystem> rank_two_subsystems(const RootSystem& rs);

/// I intersected with the roots of the subsystem.
RootSubset localize_ideal(const Ideal& ideal, const RankTwoSubsystem& psi);

}  // namespace idealshi
