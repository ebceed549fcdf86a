#pragma once

// Exact integer linear algebra over Z/Q with GMP integers.
//
// Every routine here is fraction-free: rows are kept as primitive integer
// vectors, so the canonical row-echelon form of a row space is unique and can
// be compared entry by entry.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace idealshi {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

namespace linalg {

bool is_zero(const IntVector& v);
BigInt dot(const IntVector& a, const IntVector& b);

/// Divides out the content of v and flips the sign so the first nonzero entry
/// is positive. The zero vector is left untouched.
void make_primitive(IntVector& v);

/// Reduced row-echelon form with primitive rows and positive pivots; zero rows
/// are dropped. Two matrices span the same row space iff their canonical
/// forms are equal.
IntMatrix canonical_rref(IntMatrix rows);

std::size_t rank(const IntMatrix& rows);

/// Canonical basis (in the sense of canonical_rref) of {x : rows * x = 0}.
/// `cols` is the length of x; it is needed when `rows` is empty.
IntMatrix nullspace(const IntMatrix& rows, std::size_t cols);

/// True iff v lies in the row space of `basis`, which must already be in
/// canonical form.
bool in_row_space(const IntMatrix& basis, const IntVector& v);

IntVector to_int_vector(const std::vector<long>& v);
std::string to_string(const IntVector& v);

}  // namespace linalg
}  // namespace idealshi
