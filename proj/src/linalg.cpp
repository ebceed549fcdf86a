#include "idealshi/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace idealshi::linalg {

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  BigInt g = 0;
  int lead = 0;
  for (const auto& x : v) {
    if (lead == 0) lead = sgn(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return;
  if (lead < 0) g = -g;
  if (g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

namespace {

// row := pivot_value * row - row[col] * pivot_row, then made primitive.
void eliminate(IntVector& row, const IntVector& pivot_row, std::size_t col) {
  if (sgn(row[col]) == 0) return;
  const BigInt a = pivot_row[col];
  const BigInt b = row[col];
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = a * row[j] - b * pivot_row[j];
  make_primitive(row);
}

}  // namespace

IntMatrix canonical_rref(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("canonical_rref: ragged matrix");
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    make_primitive(rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next) eliminate(rows[i], rows[next], c);
    }
    ++next;
  }
  rows.resize(next);
  return rows;
}

std::size_t rank(const IntMatrix& rows) { return canonical_rref(rows).size(); }

IntMatrix nullspace(const IntMatrix& rows, std::size_t cols) {
  const IntMatrix r = canonical_rref(rows);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : r) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  BigInt scale = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r[i][pivot_col[i]].get_mpz_t());
  }
  IntMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    IntVector v(cols, 0);
    v[f] = scale;
    for (std::size_t i = 0; i < r.size(); ++i) {
      v[pivot_col[i]] = -r[i][f] * scale / r[i][pivot_col[i]];
    }
    basis.push_back(std::move(v));
  }
  return canonical_rref(std::move(basis));
}

bool in_row_space(const IntMatrix& basis, const IntVector& v) {
  IntVector w = v;
  for (const auto& row : basis) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0) ++c;
    eliminate(w, row, c);
  }
  return is_zero(w);
}

IntVector to_int_vector(const std::vector<long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace idealshi::linalg
