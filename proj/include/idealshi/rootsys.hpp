#pragma once

// Irreducible crystallographic root systems in the simple-root basis.
//
// Roots are integer coefficient vectors over the simple roots (Bourbaki
// numbering). Positive roots are kept in the canonical (height, lex) order, and
// every subset of positive roots is a bitset indexed by that order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idealshi {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A2", "b3", "G2", ... Returns nullopt on a malformed or invalid
  /// (family, rank) pair.
  static std::optional<RootSystemType> parse(std::string_view text);
  bool valid() const;
  std::string name() const;
  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

struct Root {
  std::vector<int> coeffs;

  int height() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// "a1+a2", "3a1+2a2", ... (simple roots are 1-based).
std::string format_root(const Root& r);
std::optional<Root> parse_root(std::string_view text, int rank);

/// Sorted multiset of nonnegative integers: exponents of an arrangement or a
/// multiarrangement.
struct ExponentMultiset {
  std::vector<long> parts;

  ExponentMultiset() = default;
  explicit ExponentMultiset(std::vector<long> p);

  long sum() const;
  std::size_t size() const { return parts.size(); }
  std::string to_string() const;
  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;
};

/// A set of positive roots, indexed by the canonical root order.
class RootSubset {
 public:
  RootSubset() = default;
  explicit RootSubset(std::size_t universe) : bits_(universe, false) {}
  static RootSubset all(std::size_t universe);
  static RootSubset from_indices(std::size_t universe, const std::vector<std::size_t>& idx);

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_[i]; }
  void insert(std::size_t i) { bits_[i] = true; }
  void erase(std::size_t i) { bits_[i] = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> indices() const;
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const RootSubset&, const RootSubset&) = default;
  friend auto operator<=>(const RootSubset&, const RootSubset&) = default;

 private:
  std::vector<bool> bits_;
};

class RootSystem {
 public:
  /// Generates the positive roots by closing the simple roots under the
  /// simple reflections. Throws PreconditionError on an invalid type.
  static RootSystem build(const RootSystemType& type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_[i]; }
  std::size_t num_positive() const { return roots_.size(); }
  const Root& highest_root() const { return roots_.back(); }
  int coxeter_number() const { return coxeter_; }
  /// g[i] = number of positive roots of height i, for 1 <= i <= h; g[0] is
  /// unused and zero.
  const std::vector<int>& height_counts() const { return heights_; }

  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_simple(std::size_t i) const { return roots_[i].height() == 1; }
  std::vector<std::size_t> simple_indices() const;

 private:
  RootSystemType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  int coxeter_ = 0;
  std::vector<int> heights_;
};

/// Symmetrized Gram matrix of the simple roots, scaled to integers.
std::vector<std::vector<int>> gram_matrix(const RootSystemType& type);

/// Conjugate-partition operator. With f_i the multiplicity of i in `values`,
/// returns ((0)^{d-f_1}, (1)^{f_1-f_2}, ..., (m)^{f_m}). Throws
/// PreconditionError unless d >= f_1 >= f_2 >= ... and all values are
/// positive.
ExponentMultiset dual_partition(const std::vector<long>& values, long d);

ExponentMultiset weyl_exponents(const RootSystem& rs);

/// Extended height of the affine root vector alpha - j z.
long ext_height(int root_height, long j, int coxeter_number);
long ext_height(const Root& root, long j, const RootSystem& rs);
/// Extended height of the coning vector z.
constexpr long ext_height_z() { return 1; }

enum class Sign { Plus, Minus };
char sign_char(Sign s);

/// Extended heights of the vector set {alpha - j z : 1-k <= j <= k} u {z},
/// with alpha + k z added for alpha in `subset` (Plus) or alpha - k z removed
/// for alpha in `subset` (Minus).
std::vector<long> shi_ext_heights(const RootSystem& rs, long k, const RootSubset& subset, Sign sign);

/// Dual partition of shi_ext_heights with d = rank + 1.
ExponentMultiset shi_exponents_dp(const RootSystem& rs, long k, const RootSubset& subset, Sign sign);

}  // namespace idealshi
