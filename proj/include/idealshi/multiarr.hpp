#pragma once

// Rank-2 multiarrangements and the rank-3 freeness criterion.

#include <cstddef>
#include <optional>
#include <vector>

#include "idealshi/arrangement.hpp"
#include "idealshi/charpoly.hpp"
#include "idealshi/rootsys.hpp"

namespace idealshi {

/// Multiplicity per hyperplane, aligned with Arrangement::hyperplanes().
using Multiplicity = std::vector<long>;

long total_multiplicity(const Multiplicity& m);

/// theta = P d/dx + Q d/dy with P, Q homogeneous of degree `degree`;
/// coefficient i multiplies x^i y^(degree - i).
struct Derivation2D {
  std::size_t degree = 0;
  std::vector<Rational> p;
  std::vector<Rational> q;
};

/// Dimension of the degree-d part of D(A, m) for a rank-2 arrangement.
std::size_t derivation_space_dim(const Arrangement& a, const Multiplicity& m, std::size_t degree);

/// A nonzero element of D(A, m) of the given degree, if there is one.
std::optional<Derivation2D> find_derivation(const Arrangement& a, const Multiplicity& m, std::size_t degree);

/// Exponents (d1, d2), d1 <= d2, of a multiarrangement in two coordinates.
struct Rank2Exponents {
  long d1 = 0;
  long d2 = 0;
};
Rank2Exponents exp_rank2_multi(const Arrangement& a, const Multiplicity& m);

/// (kh + e_1, ..., kh + e_l) for Plus, (kh - e_1, ...) for Minus.
ExponentMultiset shift_predict(const ExponentMultiset& base, long k, long h, Sign sign);

struct YoshinagaVerdict {
  bool free = false;
  BigInt chi0_at_zero;
  Rank2Exponents ziegler;
  ExponentMultiset exponents;  // (1, d1, d2) when free
  Polynomial chi;
};

/// Freeness test for an arrangement in three coordinates: free iff
/// chi_0(A, 0) equals d1 * d2 for the Ziegler restriction onto h0.
YoshinagaVerdict yoshinaga_check(const Arrangement& a, const Covector& h0, const LatticeLimits& limits = {});

}  // namespace idealshi
