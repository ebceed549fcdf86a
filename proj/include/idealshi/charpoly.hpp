#pragma once

// Characteristic polynomials of central arrangements.
//
// Three independent routes: the Moebius function of the intersection lattice
// (authoritative), the signed sum over central subsets, and point counts over
// prime fields.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "idealshi/arrangement.hpp"
#include "idealshi/linalg.hpp"
#include "idealshi/rootsys.hpp"

namespace idealshi {

/// Dense polynomial in t with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  static Polynomial monomial(std::size_t degree);
  /// prod (t - r).
  static Polynomial from_roots(const std::vector<long>& roots);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  BigInt operator()(const BigInt& t) const;

  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;
  /// Quotient and remainder of division by (t - a).
  std::pair<Polynomial, BigInt> divide_linear(const BigInt& a) const;

  /// Coefficient strings, lowest degree first; used by reports.
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

Polynomial charpoly_mobius(const Arrangement& a, const LatticeLimits& limits = {});
Polynomial charpoly_from_lattice(const IntersectionLattice& lattice);

/// Signed sum over all subsets; refuses arrangements with more than
/// `max_hyperplanes` hyperplanes.
Polynomial charpoly_whitney(const Arrangement& a, std::size_t max_hyperplanes = 22);

/// The prime set produced an interpolation that is not a monic integer
/// polynomial of the right degree, or disagrees on a surplus prime.
class BadReduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of points of F_q^n lying on no hyperplane of A.
BigInt complement_point_count(const Arrangement& a, long q);

/// Interpolates point counts at the given primes. Needs at least
/// ambient_dim + 1 primes, each larger than every |entry| and than
/// ambient_dim + 1; any primes beyond that are used as consistency checks.
Polynomial charpoly_finite_field(const Arrangement& a, const std::vector<long>& primes);

/// ambient_dim + 2 consecutive primes above max(`above`, every |entry|,
/// ambient_dim + 1).
std::vector<long> default_primes(const Arrangement& a, long above = 0);

struct FiniteFieldResult {
  Polynomial poly;
  std::vector<long> primes;
  int attempts = 0;
};

/// Finite-field route with retries: a prime set that fails to interpolate, or
/// disagrees with `reference` when one is given, is discarded and the next
/// set of larger primes is tried. Throws InvariantViolation after
/// `max_attempts` failures.
FiniteFieldResult charpoly_finite_field_checked(const Arrangement& a, const Polynomial* reference = nullptr,
                                                int max_attempts = 12);

/// chi / (t - 1). Throws PreconditionError if (t - 1) does not divide p.
Polynomial chi0(const Polynomial& p);
BigInt chi0_at_zero(const Arrangement& a, const LatticeLimits& limits = {});

struct FactorFailure {
  std::vector<long> roots_found;
  Polynomial residual;
};
using FactorResult = std::variant<ExponentMultiset, FactorFailure>;

/// Splits a monic integer polynomial into linear factors with nonnegative
/// integer roots, or reports the part that does not split that way.
FactorResult try_factor_exponents(const Polynomial& p);

struct TeraoVerdict {
  bool pass = false;
  Polynomial chi;
  Polynomial predicted_poly;
  ExponentMultiset predicted;
};

/// PASS iff chi(A, t) = prod (t - e_i) over the predicted exponents.
TeraoVerdict terao_check(const Arrangement& a, const ExponentMultiset& predicted, const LatticeLimits& limits = {});
TeraoVerdict terao_check(const Polynomial& chi, std::size_t ambient_dim, const ExponentMultiset& predicted);

}  // namespace idealshi
