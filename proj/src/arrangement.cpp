#include "idealshi/arrangement.hpp"

#include <algorithm>

#include "idealshi/errors.hpp"

namespace idealshi {

// ---------------------------------------------------------------------------
// Covector / Arrangement

Covector::Covector(IntVector entries) : entries_(std::move(entries)) {
  if (linalg::is_zero(entries_)) throw PreconditionError("zero covector does not define a hyperplane");
  linalg::make_primitive(entries_);
}

Covector Covector::from_longs(const std::vector<long>& entries) { return Covector(linalg::to_int_vector(entries)); }

Covector affine_root_covector(const Root& alpha, long j) {
  IntVector v;
  v.reserve(alpha.coeffs.size() + 1);
  for (int c : alpha.coeffs) v.emplace_back(c);
  v.emplace_back(-j);
  return Covector(std::move(v));
}

Covector coning_covector(int rank) {
  IntVector v(static_cast<std::size_t>(rank) + 1, 0);
  v.back() = 1;
  return Covector(std::move(v));
}

Covector root_covector(const Root& alpha) {
  IntVector v;
  for (int c : alpha.coeffs) v.emplace_back(c);
  return Covector(std::move(v));
}

Arrangement::Arrangement(std::size_t ambient_dim, const std::vector<Covector>& hyperplanes) : dim_(ambient_dim) {
  for (const auto& h : hyperplanes) add(h);
}

bool Arrangement::add(const Covector& h) {
  if (h.dim() != dim_) {
    throw PreconditionError("covector " + h.to_string() + " does not live in dimension " + std::to_string(dim_));
  }
  if (!index_.emplace(key(h), hyperplanes_.size()).second) return false;
  hyperplanes_.push_back(h);
  return true;
}

std::optional<std::size_t> Arrangement::index_of(const Covector& h) const {
  const auto it = index_.find(key(h));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Arrangement Arrangement::without(std::size_t i) const {
  Arrangement out(dim_);
  for (std::size_t j = 0; j < hyperplanes_.size(); ++j) {
    if (j != i) out.add(hyperplanes_[j]);
  }
  return out;
}

std::vector<Covector> Arrangement::sorted() const {
  auto out = hyperplanes_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Arrangement::same_set(const Arrangement& other) const {
  return dim_ == other.dim_ && sorted() == other.sorted();
}

// ---------------------------------------------------------------------------
// Shi-type constructions

Arrangement shi_plus(const RootSystem& rs, long k, const RootSubset& subset) { return shi(rs, k, subset, Sign::Plus); }

Arrangement shi_minus(const RootSystem& rs, long k, const RootSubset& subset) { return shi(rs, k, subset, Sign::Minus); }

Arrangement shi(const RootSystem& rs, long k, const RootSubset& subset, Sign sign) {
  if (k < 1) throw PreconditionError("k must be positive, got " + std::to_string(k));
  if (subset.universe() != rs.num_positive()) throw PreconditionError("subset universe mismatch");
  Arrangement a(static_cast<std::size_t>(rs.rank()) + 1);
  a.add(coning_covector(rs.rank()));
  for (long j = 1 - k; j <= k; ++j) {
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
      if (sign == Sign::Minus && j == k && subset.contains(i)) continue;
      a.add(affine_root_covector(rs.root(i), j));
    }
  }
  if (sign == Sign::Plus) {
    for (auto i : subset.indices()) a.add(affine_root_covector(rs.root(i), -k));
  }
  return a;
}

Arrangement root_arrangement(const RootSystem& rs, const RootSubset& subset) {
  Arrangement a(static_cast<std::size_t>(rs.rank()));
  for (auto i : subset.indices()) a.add(root_covector(rs.root(i)));
  return a;
}

FiltrationHyperplane filtration_hyperplane(const RootSystem& rs, const LinearExtension& order, long p) {
  if (p < 1) throw PreconditionError("filtration index must be positive");
  const long n = static_cast<long>(rs.num_positive());
  const long q = (p - 1) / (2 * n);
  const long r = p - 2 * n * q;
  if (r <= n) return {order.order[static_cast<std::size_t>(r - 1)], -q};
  return {order.order[static_cast<std::size_t>(2 * n - r)], q + 1};
}

Arrangement filtration_step(const RootSystem& rs, long i) {
  if (i < 1) throw PreconditionError("filtration step must be positive");
  const auto order = linear_extension(rs);
  Arrangement a(static_cast<std::size_t>(rs.rank()) + 1);
  a.add(coning_covector(rs.rank()));
  for (long p = 1; p < i; ++p) {
    const auto k = filtration_hyperplane(rs, order, p);
    if (!a.add(affine_root_covector(rs.root(k.root), k.level))) {
      throw InvariantViolation("filtration hyperplane K_" + std::to_string(p) + " repeats an earlier one");
    }
  }
  return a;
}

ExponentMultiset filtration_exponents_dp(const RootSystem& rs, long i) {
  if (i < 1) throw PreconditionError("filtration step must be positive");
  const auto order = linear_extension(rs);
  std::vector<long> values{ext_height_z()};
  for (long p = 1; p < i; ++p) {
    const auto k = filtration_hyperplane(rs, order, p);
    values.push_back(ext_height(rs.root(k.root), k.level, rs));
  }
  return dual_partition(values, rs.rank() + 1);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s;
  s.dim_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IntVector e(ambient_dim, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, IntMatrix vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw PreconditionError("vector length does not match ambient dimension");
  }
  Subspace s;
  s.dim_ = ambient_dim;
  s.basis_ = linalg::canonical_rref(std::move(vectors));
  return s;
}

Subspace Subspace::intersection(std::size_t ambient_dim, const std::vector<Covector>& forms) {
  IntMatrix rows;
  for (const auto& f : forms) {
    if (f.dim() != ambient_dim) throw PreconditionError("covector dimension mismatch");
    rows.push_back(f.entries());
  }
  Subspace s;
  s.dim_ = ambient_dim;
  s.basis_ = linalg::nullspace(rows, ambient_dim);
  return s;
}

bool Subspace::inside(const Covector& h) const {
  for (const auto& v : basis_) {
    if (sgn(linalg::dot(h.entries(), v)) != 0) return false;
  }
  return true;
}

Subspace Subspace::meet(const Covector& h) const {
  std::vector<BigInt> values;
  values.reserve(basis_.size());
  std::size_t pivot = basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    values.push_back(linalg::dot(h.entries(), basis_[i]));
    if (pivot == basis_.size() && sgn(values.back()) != 0) pivot = i;
  }
  if (pivot == basis_.size()) return *this;
  IntMatrix rows;
  rows.reserve(basis_.size() - 1);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i == pivot) continue;
    IntVector r(dim_);
    for (std::size_t c = 0; c < dim_; ++c) r[c] = values[pivot] * basis_[i][c] - values[i] * basis_[pivot][c];
    rows.push_back(std::move(r));
  }
  Subspace s;
  s.dim_ = dim_;
  s.basis_ = linalg::canonical_rref(std::move(rows));
  return s;
}

std::size_t Subspace::hash() const {
  std::size_t h = dim_ * 0x9E3779B97F4A7C15ULL;
  for (const auto& row : basis_) {
    for (const auto& x : row) {
      const std::size_t v = x.fits_slong_p() ? static_cast<std::size_t>(x.get_si()) : std::hash<std::string>{}(x.get_str());
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    h = h * 31 + 7;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Intersection lattice

IntersectionLattice IntersectionLattice::build(const Arrangement& a, const LatticeLimits& limits) {
  if (a.size() > limits.max_hyperplanes) {
    throw BoundExceeded("arrangement has " + std::to_string(a.size()) + " hyperplanes, bound is " +
                        std::to_string(limits.max_hyperplanes));
  }
  if (a.ambient_dim() > limits.max_ambient_dim) {
    throw BoundExceeded("ambient dimension " + std::to_string(a.ambient_dim()) + " exceeds bound " +
                        std::to_string(limits.max_ambient_dim));
  }
  IntersectionLattice lat;
  lat.dim_ = a.ambient_dim();
  lat.flats_.push_back(Flat{Subspace::whole(lat.dim_), {}, {}, BigInt(1)});
  lat.lookup_.emplace(lat.flats_[0].space, 0);
  lat.levels_.push_back({0});

  const std::size_t n = a.size();
  std::vector<char> covered(n);
  while (true) {
    std::vector<std::size_t> next;
    for (std::size_t x : lat.levels_.back()) {
      std::fill(covered.begin(), covered.end(), 0);
      for (auto i : lat.flats_[x].hyperplanes) covered[i] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (covered[i]) continue;
        Subspace y = lat.flats_[x].space.meet(a[i]);
        auto [it, inserted] = lat.lookup_.emplace(std::move(y), lat.flats_.size());
        const std::size_t yi = it->second;
        if (inserted) {
          Flat f{it->first, {}, {}, BigInt(0)};
          for (std::size_t j = 0; j < n; ++j) {
            if (f.space.inside(a[j])) f.hyperplanes.push_back(j);
          }
          lat.flats_.push_back(std::move(f));
          next.push_back(yi);
          if (lat.flats_.size() > limits.max_flats) {
            throw BoundExceeded("intersection lattice exceeds " + std::to_string(limits.max_flats) + " flats");
          }
        }
        lat.flats_[yi].covers.push_back(x);
        for (auto j : lat.flats_[yi].hyperplanes) covered[j] = 1;
      }
    }
    if (next.empty()) break;
    lat.levels_.push_back(std::move(next));
  }

  // mu(X) = -sum of mu(Y) over all Y strictly containing X.
  std::vector<std::size_t> stamp(lat.flats_.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t r = 1; r < lat.levels_.size(); ++r) {
    for (std::size_t x : lat.levels_[r]) {
      BigInt sum = 0;
      const std::size_t mark = x + 1;
      stack.assign(lat.flats_[x].covers.begin(), lat.flats_[x].covers.end());
      for (auto y : stack) stamp[y] = mark;
      while (!stack.empty()) {
        const std::size_t y = stack.back();
        stack.pop_back();
        sum += lat.flats_[y].mobius;
        for (auto z : lat.flats_[y].covers) {
          if (stamp[z] != mark) {
            stamp[z] = mark;
            stack.push_back(z);
          }
        }
      }
      lat.flats_[x].mobius = -sum;
    }
  }
  return lat;
}

std::vector<std::size_t> IntersectionLattice::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.size());
  return out;
}

std::optional<std::size_t> IntersectionLattice::find(const Subspace& x) const {
  const auto it = lookup_.find(x);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> hyperplanes_containing(const Arrangement& a, const Subspace& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x.inside(a[i])) out.push_back(i);
  }
  return out;
}

bool in_lattice(const Arrangement& a, const Subspace& x) {
  if (x.ambient_dim() != a.ambient_dim()) return false;
  std::vector<Covector> forms;
  for (auto i : hyperplanes_containing(a, x)) forms.push_back(a[i]);
  return Subspace::intersection(a.ambient_dim(), forms) == x;
}

Arrangement localization(const Arrangement& a, const Subspace& x) {
  if (!in_lattice(a, x)) throw PreconditionError("subspace is not an intersection of hyperplanes of the arrangement");
  Arrangement out(a.ambient_dim());
  for (auto i : hyperplanes_containing(a, x)) out.add(a[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Restriction

IntMatrix hyperplane_basis(const Covector& h) { return linalg::nullspace({h.entries()}, h.dim()); }

std::optional<Covector> restrict_covector(const Covector& k, const IntMatrix& basis_of_h) {
  IntVector v;
  v.reserve(basis_of_h.size());
  for (const auto& b : basis_of_h) v.push_back(linalg::dot(k.entries(), b));
  if (linalg::is_zero(v)) return std::nullopt;
  return Covector(std::move(v));
}

namespace {

ZieglerRestriction restrict_with_counts(const Arrangement& a, const Covector& h0) {
  const IntMatrix basis = hyperplane_basis(h0);
  ZieglerRestriction z{Arrangement(a.ambient_dim() - 1), {}};
  for (const auto& k : a.hyperplanes()) {
    if (k == h0) continue;
    auto r = restrict_covector(k, basis);
    if (!r) throw InvariantViolation("distinct hyperplane restricts to the whole of H0");
    if (z.arrangement.add(*r)) {
      z.multiplicity.push_back(1);
    } else {
      ++z.multiplicity[*z.arrangement.index_of(*r)];
    }
  }
  return z;
}

}  // namespace

ZieglerRestriction ziegler_multiplicity(const Arrangement& a, const Covector& h0) {
  if (!a.contains(h0)) throw PreconditionError("hyperplane " + h0.to_string() + " is not in the arrangement");
  return restrict_with_counts(a, h0);
}

Arrangement restriction(const Arrangement& a, const Covector& h0) {
  if (h0.dim() != a.ambient_dim()) throw PreconditionError("restriction: dimension mismatch");
  return restrict_with_counts(a, h0).arrangement;
}

std::size_t intersection_count(const Arrangement& a, const Covector& h0) { return restriction(a, h0).size(); }

}  // namespace idealshi
