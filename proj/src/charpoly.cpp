#include "idealshi/charpoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "idealshi/errors.hpp"

namespace idealshi {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t degree) {
  std::vector<BigInt> c(degree + 1, 0);
  c.back() = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<long>& roots) {
  Polynomial p = monomial(0);
  for (long r : roots) p = p * Polynomial({BigInt(-r), BigInt(1)});
  return p;
}

BigInt Polynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return Polynomial(std::move(c));
}

std::pair<Polynomial, BigInt> Polynomial::divide_linear(const BigInt& a) const {
  if (coeffs_.empty()) return {Polynomial{}, BigInt(0)};
  std::vector<BigInt> q(coeffs_.size() - 1, 0);
  BigInt carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * a + coeffs_[i];
    if (i > 0) q[i - 1] = carry;
  }
  return {Polynomial(std::move(q)), carry};
}

std::vector<std::string> Polynomial::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << 't';
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Moebius route

Polynomial charpoly_from_lattice(const IntersectionLattice& lattice) {
  std::vector<BigInt> c(lattice.ambient_dim() + 1, 0);
  for (const auto& f : lattice.flats()) c[f.space.dim()] += f.mobius;
  return Polynomial(std::move(c));
}

Polynomial charpoly_mobius(const Arrangement& a, const LatticeLimits& limits) {
  return charpoly_from_lattice(IntersectionLattice::build(a, limits));
}

// ---------------------------------------------------------------------------
// Subset-sum route

namespace {

constexpr std::size_t kMaxWhitneyDim = 16;
using Row = std::array<long long, kMaxWhitneyDim>;

struct WhitneySweep {
  std::size_t dim = 0;
  std::vector<Row> forms;
  std::array<Row, kMaxWhitneyDim> rows{};
  std::array<std::size_t, kMaxWhitneyDim> pivots{};
  std::vector<long long> counts;  // index = rank

  static long long checked_mul_sub(long long a, long long x, long long b, long long y) {
    long long p = 0, q = 0, r = 0;
    if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) || __builtin_sub_overflow(p, q, &r)) {
      throw BoundExceeded("64-bit overflow in subset-sum characteristic polynomial");
    }
    return r;
  }

  // Reduces v against the first `rank` rows; returns the new pivot or dim if v vanished.
  std::size_t reduce(Row& v, std::size_t rank) const {
    for (std::size_t r = 0; r < rank; ++r) {
      const std::size_t p = pivots[r];
      if (v[p] == 0) continue;
      const long long a = rows[r][p], b = v[p];
      long long g = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        v[c] = checked_mul_sub(a, v[c], b, rows[r][c]);
        g = std::gcd(g, v[c]);
      }
      if (g > 1) {
        for (std::size_t c = 0; c < dim; ++c) v[c] /= g;
      }
    }
    for (std::size_t c = 0; c < dim; ++c) {
      if (v[c] != 0) return c;
    }
    return dim;
  }

  void run(std::size_t i, std::size_t rank, int sign) {
    if (i == forms.size()) {
      counts[rank] += sign;
      return;
    }
    run(i + 1, rank, sign);
    Row v = forms[i];
    const std::size_t p = reduce(v, rank);
    if (p == dim) {
      run(i + 1, rank, -sign);
    } else {
      rows[rank] = v;
      pivots[rank] = p;
      run(i + 1, rank + 1, -sign);
    }
  }
};

}  // namespace

Polynomial charpoly_whitney(const Arrangement& a, std::size_t max_hyperplanes) {
  if (a.size() > max_hyperplanes) {
    throw BoundExceeded("subset sum over " + std::to_string(a.size()) + " hyperplanes exceeds bound " +
                        std::to_string(max_hyperplanes));
  }
  if (a.ambient_dim() > kMaxWhitneyDim) throw BoundExceeded("subset sum supports ambient dimension <= 16");
  WhitneySweep sweep;
  sweep.dim = a.ambient_dim();
  sweep.counts.assign(sweep.dim + 1, 0);
  for (const auto& h : a.hyperplanes()) {
    Row r{};
    for (std::size_t c = 0; c < sweep.dim; ++c) {
      if (!h.entries()[c].fits_slong_p()) throw BoundExceeded("covector entry exceeds 64 bits");
      r[c] = h.entries()[c].get_si();
    }
    sweep.forms.push_back(r);
  }
  sweep.run(0, 0, 1);
  std::vector<BigInt> c(sweep.dim + 1, 0);
  for (std::size_t rank = 0; rank <= sweep.dim; ++rank) c[sweep.dim - rank] = static_cast<long>(sweep.counts[rank]);
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Finite-field route

namespace {

long mod_pow(long b, long e, long q) {
  long r = 1 % q;
  b %= q;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % q);
    b = static_cast<long>((static_cast<__int128>(b) * b) % q);
    e >>= 1;
  }
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long max_abs_entry(const Arrangement& a) {
  BigInt m = 0;
  for (const auto& h : a.hyperplanes()) {
    for (const auto& x : h.entries()) {
      if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    }
  }
  if (!m.fits_slong_p()) throw BoundExceeded("covector entries too large for point counting");
  return m.get_si();
}

}  // namespace

BigInt complement_point_count(const Arrangement& a, long q) {
  if (!is_prime(q)) throw PreconditionError(std::to_string(q) + " is not prime");
  const std::size_t n = a.ambient_dim();
  if (n == 0) return BigInt(1);
  const std::size_t m = a.size();
  std::vector<std::vector<long>> forms(m, std::vector<long>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), a[i].entries()[c].get_mpz_t(), static_cast<unsigned long>(q));
      forms[i][c] = r.get_si();
    }
  }
  // Inverse of the last coefficient, or 0 when the last coefficient vanishes mod q.
  std::vector<long> inv_last(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (forms[i][n - 1] != 0) inv_last[i] = mod_pow(forms[i][n - 1], q - 2, q);
  }

  std::vector<long> x(n - 1, 0);
  std::vector<std::size_t> seen(static_cast<std::size_t>(q), 0);
  std::size_t stamp = 0;
  BigInt total = 0;
  long long chunk = 0;
  while (true) {
    ++stamp;
    long forbidden = 0;
    bool dead = false;
    for (std::size_t i = 0; i < m && !dead; ++i) {
      long s = 0;
      for (std::size_t c = 0; c + 1 < n; ++c) s = (s + forms[i][c] * x[c]) % q;
      if (forms[i][n - 1] == 0) {
        dead = s == 0;
        continue;
      }
      const long v = static_cast<long>((static_cast<__int128>(q - s) % q * inv_last[i]) % q);
      if (seen[static_cast<std::size_t>(v)] != stamp) {
        seen[static_cast<std::size_t>(v)] = stamp;
        ++forbidden;
      }
    }
    if (!dead) chunk += q - forbidden;
    if (chunk > (1LL << 60)) {
      total += static_cast<long>(chunk);
      chunk = 0;
    }
    std::size_t c = 0;
    while (c + 1 < n) {
      if (++x[c] < q) break;
      x[c] = 0;
      ++c;
    }
    if (c + 1 >= n) break;
  }
  total += static_cast<long>(chunk);
  return total;
}

Polynomial charpoly_finite_field(const Arrangement& a, const std::vector<long>& primes) {
  const std::size_t n = a.ambient_dim();
  if (primes.size() < n + 1) throw PreconditionError("need at least ambient_dim + 1 primes");
  const long bound = std::max(max_abs_entry(a), static_cast<long>(n) + 1);
  for (long q : primes) {
    if (!is_prime(q) || q <= bound) {
      throw PreconditionError("prime " + std::to_string(q) + " must exceed " + std::to_string(bound));
    }
  }
  std::vector<Rational> xs, ys;
  for (long q : primes) {
    xs.emplace_back(q);
    ys.emplace_back(complement_point_count(a, q));
  }
  // Newton divided differences on the first n + 1 points.
  const std::size_t pts = n + 1;
  std::vector<Rational> dd(ys.begin(), ys.begin() + static_cast<long>(pts));
  for (std::size_t level = 1; level < pts; ++level) {
    for (std::size_t i = pts - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Expand to monomial coefficients.
  std::vector<Rational> coef(pts, 0);
  std::vector<Rational> basis{Rational(1)};  // prod_{j < i} (t - x_j)
  for (std::size_t i = 0; i < pts; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) coef[d] += dd[i] * basis[d];
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * xs[i];
    }
    basis = std::move(next);
  }
  std::vector<BigInt> ints;
  for (auto& c : coef) {
    c.canonicalize();
    if (c.get_den() != 1) throw BadReduction("non-integral interpolation: some prime has bad reduction");
    ints.push_back(c.get_num());
  }
  Polynomial p(std::move(ints));
  if (p.degree() != static_cast<long>(n) || !p.is_monic()) {
    throw BadReduction("interpolated polynomial is not monic of degree " + std::to_string(n));
  }
  for (std::size_t i = pts; i < primes.size(); ++i) {
    if (p(BigInt(primes[i])) != ys[i].get_num()) {
      throw BadReduction("surplus prime " + std::to_string(primes[i]) + " disagrees with the interpolation");
    }
  }
  return p;
}

std::vector<long> default_primes(const Arrangement& a, long above) {
  long q = std::max({above, max_abs_entry(a), static_cast<long>(a.ambient_dim()) + 1});
  std::vector<long> out;
  while (out.size() < a.ambient_dim() + 2) {
    ++q;
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

FiniteFieldResult charpoly_finite_field_checked(const Arrangement& a, const Polynomial* reference, int max_attempts) {
  long above = 0;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto primes = default_primes(a, above);
    above = primes.back();
    try {
      Polynomial p = charpoly_finite_field(a, primes);
      if (reference && p != *reference) continue;
      return {std::move(p), std::move(primes), attempt};
    } catch (const BadReduction&) {
      continue;
    }
  }
  throw InvariantViolation("finite-field characteristic polynomial never stabilized after " +
                           std::to_string(max_attempts) + " prime sets");
}

// ---------------------------------------------------------------------------
// chi_0, factoring, Terao check

Polynomial chi0(const Polynomial& p) {
  auto [q, r] = p.divide_linear(BigInt(1));
  if (sgn(r) != 0) throw PreconditionError("(t - 1) does not divide " + p.to_string() + ": arrangement is not central");
  return q;
}

BigInt chi0_at_zero(const Arrangement& a, const LatticeLimits& limits) {
  return chi0(charpoly_mobius(a, limits)).coeff(0);
}

FactorResult try_factor_exponents(const Polynomial& p) {
  if (!p.is_monic()) throw PreconditionError("try_factor_exponents needs a monic polynomial");
  std::vector<long> roots;
  Polynomial rest = p;
  while (rest.degree() > 0) {
    if (sgn(rest.coeff(0)) == 0) {
      roots.push_back(0);
      rest = rest.divide_linear(BigInt(0)).first;
      continue;
    }
    // Nonnegative roots sum to minus the subleading coefficient.
    const BigInt bound = -rest.coeff(static_cast<std::size_t>(rest.degree() - 1));
    bool found = false;
    if (sgn(bound) > 0 && bound.fits_slong_p()) {
      for (long r = 1; r <= bound.get_si(); ++r) {
        if (!mpz_divisible_ui_p(rest.coeff(0).get_mpz_t(), static_cast<unsigned long>(r))) continue;
        auto [q, rem] = rest.divide_linear(BigInt(r));
        if (sgn(rem) == 0) {
          roots.push_back(r);
          rest = std::move(q);
          found = true;
          break;
        }
      }
    }
    if (!found) return FactorFailure{roots, rest};
  }
  return ExponentMultiset(roots);
}

TeraoVerdict terao_check(const Polynomial& chi, std::size_t ambient_dim, const ExponentMultiset& predicted) {
  if (predicted.size() != ambient_dim) {
    throw PreconditionError("predicted exponents " + predicted.to_string() + " do not have " +
                            std::to_string(ambient_dim) + " parts");
  }
  TeraoVerdict v;
  v.chi = chi;
  v.predicted = predicted;
  v.predicted_poly = Polynomial::from_roots(predicted.parts);
  v.pass = v.chi == v.predicted_poly;
  return v;
}

TeraoVerdict terao_check(const Arrangement& a, const ExponentMultiset& predicted, const LatticeLimits& limits) {
  return terao_check(charpoly_mobius(a, limits), a.ambient_dim(), predicted);
}

}  // namespace idealshi
