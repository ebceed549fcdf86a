#include "idealshi/multiarr.hpp"

#include <numeric>
#include <string>

#include "idealshi/errors.hpp"

namespace idealshi {

long total_multiplicity(const Multiplicity& m) { return std::accumulate(m.begin(), m.end(), 0L); }

namespace {

void check_rank2(const Arrangement& a, const Multiplicity& m) {
  if (a.ambient_dim() != 2) throw PreconditionError("multiarrangement must live in two coordinates");
  if (m.size() != a.size()) throw PreconditionError("multiplicity does not match the arrangement");
  for (long v : m) {
    if (v < 0) throw PreconditionError("multiplicities must be nonnegative");
  }
}

std::vector<BigInt> binomial_row(std::size_t n) {
  std::vector<BigInt> row(n + 1, 1);
  for (std::size_t i = 1; i < n; ++i) mpz_bin_uiui(row[i].get_mpz_t(), n, i);
  return row;
}

// Coefficients of s^i in (a s - b u)^e (b s + a u)^(d - e).
std::vector<BigInt> substituted_monomial(const BigInt& a, const BigInt& b, std::size_t e, std::size_t d) {
  std::vector<BigInt> left(e + 1), right(d - e + 1);
  const auto be = binomial_row(e);
  const auto bd = binomial_row(d - e);
  for (std::size_t i = 0; i <= e; ++i) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), i);
    BigInt nb = -b, t2;
    mpz_pow_ui(t2.get_mpz_t(), nb.get_mpz_t(), e - i);
    left[i] = be[i] * t * t2;
  }
  for (std::size_t j = 0; j <= d - e; ++j) {
    BigInt t, t2;
    mpz_pow_ui(t.get_mpz_t(), b.get_mpz_t(), j);
    mpz_pow_ui(t2.get_mpz_t(), a.get_mpz_t(), d - e - j);
    right[j] = bd[j] * t * t2;
  }
  std::vector<BigInt> out(d + 1, 0);
  for (std::size_t i = 0; i <= e; ++i) {
    for (std::size_t j = 0; j <= d - e; ++j) out[i + j] += left[i] * right[j];
  }
  return out;
}

// Rows are linear conditions on (P_0..P_d, Q_0..Q_d): for each line a x + b y
// with multiplicity m, writing x = a s - b u, y = b s + a u turns the line into
// (a^2 + b^2) s, so divisibility by its m-th power means the coefficients of
// s^0 .. s^(m-1) in a P + b Q vanish.
IntMatrix divisibility_conditions(const Arrangement& a, const Multiplicity& m, std::size_t d) {
  IntMatrix rows;
  for (std::size_t h = 0; h < a.size(); ++h) {
    const BigInt& la = a[h].entries()[0];
    const BigInt& lb = a[h].entries()[1];
    const std::size_t needed = std::min<std::size_t>(static_cast<std::size_t>(m[h]), d + 1);
    if (needed == 0) continue;
    std::vector<std::vector<BigInt>> expanded;
    for (std::size_t e = 0; e <= d; ++e) expanded.push_back(substituted_monomial(la, lb, e, d));
    for (std::size_t i = 0; i < needed; ++i) {
      IntVector row(2 * (d + 1), 0);
      for (std::size_t e = 0; e <= d; ++e) {
        row[e] = la * expanded[e][i];
        row[d + 1 + e] = lb * expanded[e][i];
      }
      if (!linalg::is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::size_t derivation_space_dim(const Arrangement& a, const Multiplicity& m, std::size_t degree) {
  check_rank2(a, m);
  return 2 * (degree + 1) - linalg::rank(divisibility_conditions(a, m, degree));
}

std::optional<Derivation2D> find_derivation(const Arrangement& a, const Multiplicity& m, std::size_t degree) {
  check_rank2(a, m);
  const IntMatrix kernel = linalg::nullspace(divisibility_conditions(a, m, degree), 2 * (degree + 1));
  if (kernel.empty()) return std::nullopt;
  Derivation2D theta;
  theta.degree = degree;
  for (std::size_t e = 0; e <= degree; ++e) {
    theta.p.emplace_back(kernel[0][e]);
    theta.q.emplace_back(kernel[0][degree + 1 + e]);
  }
  return theta;
}

Rank2Exponents exp_rank2_multi(const Arrangement& a, const Multiplicity& m) {
  check_rank2(a, m);
  if (a.size() == 0) throw PreconditionError("multiarrangement needs at least one line");
  const long total = total_multiplicity(m);
  // D(A, m) is free of rank 2 (Ziegler), so dim D_d = (d - d1 + 1)_+ + (d - d2 + 1)_+.
  std::optional<long> d1;
  for (long d = 0; d <= total + 1; ++d) {
    const auto dim = static_cast<long>(derivation_space_dim(a, m, static_cast<std::size_t>(d)));
    if (!d1) {
      if (dim == 0) continue;
      d1 = d;
      if (dim >= 2) {
        if (dim != 2) throw InvariantViolation("rank-2 derivation module has more than two generators in lowest degree");
        if (2 * d != total) throw InvariantViolation("rank-2 multiarrangement exponents do not sum to |m|");
        return {d, d};
      }
      continue;
    }
    if (dim > d - *d1 + 1) {
      if (*d1 + d != total) throw InvariantViolation("rank-2 multiarrangement exponents do not sum to |m|");
      return {*d1, d};
    }
  }
  throw InvariantViolation("no second exponent found up to degree |m| + 1");
}

ExponentMultiset shift_predict(const ExponentMultiset& base, long k, long h, Sign sign) {
  std::vector<long> parts;
  for (long e : base.parts) parts.push_back(sign == Sign::Plus ? k * h + e : k * h - e);
  return ExponentMultiset(std::move(parts));
}

YoshinagaVerdict yoshinaga_check(const Arrangement& a, const Covector& h0, const LatticeLimits& limits) {
  if (a.ambient_dim() != 3) throw PreconditionError("yoshinaga_check needs an arrangement in three coordinates");
  const auto z = ziegler_multiplicity(a, h0);
  YoshinagaVerdict v;
  v.ziegler = exp_rank2_multi(z.arrangement, z.multiplicity);
  v.chi = charpoly_mobius(a, limits);
  v.chi0_at_zero = chi0(v.chi).coeff(0);
  v.free = v.chi0_at_zero == BigInt(v.ziegler.d1) * v.ziegler.d2;
  if (v.free) v.exponents = ExponentMultiset({1, v.ziegler.d1, v.ziegler.d2});
  return v;
}

}  // namespace idealshi
