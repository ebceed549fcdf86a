#include "idealshi/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "idealshi/errors.hpp"
#include "idealshi/linalg.hpp"

namespace idealshi {

bool dominance_leq(const Root& beta, const Root& alpha) {
  if (beta.coeffs.size() != alpha.coeffs.size()) return false;
  for (std::size_t i = 0; i < beta.coeffs.size(); ++i) {
    if (alpha.coeffs[i] < beta.coeffs[i]) return false;
  }
  return true;
}

bool is_ideal(const RootSystem& rs, const RootSubset& s) {
  if (s.universe() != rs.num_positive()) return false;
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    if (!s.contains(a)) continue;
    for (std::size_t b = 0; b < rs.num_positive(); ++b) {
      if (!s.contains(b) && dominance_leq(rs.root(b), rs.root(a))) return false;
    }
  }
  return true;
}

Ideal::Ideal(const RootSystem& rs, RootSubset members) : members_(std::move(members)) {
  if (!is_ideal(rs, members_)) throw PreconditionError("subset is not an ideal of " + rs.type().name());
}

Ideal Ideal::empty(const RootSystem& rs) { return Ideal(RootSubset(rs.num_positive()), Trusted{}); }
Ideal Ideal::full(const RootSystem& rs) { return Ideal(RootSubset::all(rs.num_positive()), Trusted{}); }

long catalan_number(const RootSystem& rs) {
  const long h = rs.coxeter_number();
  // Accumulate numerator and denominator separately; the quotient is exact.
  BigInt num = 1, den = 1;
  for (long e : weyl_exponents(rs).parts) {
    num *= e + h + 1;
    den *= e + 1;
  }
  BigInt q = num / den;
  return q.get_si();
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs, int max_rank) {
  if (rs.rank() > max_rank) {
    throw BoundExceeded("ideal enumeration for " + rs.type().name() + " exceeds rank bound " +
                        std::to_string(max_rank));
  }
  const std::size_t n = rs.num_positive();
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && dominance_leq(rs.root(b), rs.root(a))) below[a].push_back(b);
    }
  }
  std::set<RootSubset> seen{RootSubset(n)};
  std::deque<RootSubset> queue{RootSubset(n)};
  while (!queue.empty()) {
    const RootSubset cur = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < n; ++a) {
      if (cur.contains(a)) continue;
      if (!std::all_of(below[a].begin(), below[a].end(), [&](std::size_t b) { return cur.contains(b); })) continue;
      RootSubset next = cur;
      next.insert(a);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<RootSubset> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RootSubset& x, const RootSubset& y) { return x.count() < y.count(); });
  std::vector<Ideal> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(Ideal(std::move(s), Ideal::Trusted{}));
  if (static_cast<long>(out.size()) != catalan_number(rs)) {
    throw InvariantViolation("ideal count " + std::to_string(out.size()) + " for " + rs.type().name() +
                             " disagrees with the Catalan number " + std::to_string(catalan_number(rs)));
  }
  return out;
}

std::vector<long> height_profile(const RootSystem& rs, const RootSubset& s) {
  std::vector<long> p(static_cast<std::size_t>(rs.coxeter_number()) + 1, 0);
  for (auto i : s.indices()) ++p[static_cast<std::size_t>(rs.root(i).height())];
  return p;
}

ExponentMultiset ideal_exponents(const RootSystem& rs, const Ideal& ideal) {
  std::vector<long> heights;
  for (auto i : ideal.members().indices()) heights.push_back(rs.root(i).height());
  return dual_partition(heights, rs.rank());
}

LinearExtension linear_extension(const RootSystem& rs) {
  LinearExtension le;
  le.order.resize(rs.num_positive());
  for (std::size_t i = 0; i < le.order.size(); ++i) le.order[i] = i;
  return le;
}

// ---------------------------------------------------------------------------
// Rank-2 localizations

namespace {

IntVector as_int_vector(const Root& r) {
  IntVector v;
  for (int c : r.coeffs) v.emplace_back(c);
  return v;
}

// Solves a*g1 + b*g2 = v over Q; returns false if there is no solution.
bool solve_pair(const Root& g1, const Root& g2, const Root& v, Rational& a, Rational& b) {
  const std::size_t n = v.coeffs.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const long det = static_cast<long>(g1.coeffs[p]) * g2.coeffs[q] - static_cast<long>(g1.coeffs[q]) * g2.coeffs[p];
      if (det == 0) continue;
      a = Rational(static_cast<long>(v.coeffs[p]) * g2.coeffs[q] - static_cast<long>(v.coeffs[q]) * g2.coeffs[p], det);
      b = Rational(static_cast<long>(g1.coeffs[p]) * v.coeffs[q] - static_cast<long>(g1.coeffs[q]) * v.coeffs[p], det);
      a.canonicalize();
      b.canonicalize();
      for (std::size_t i = 0; i < n; ++i) {
        if (a * g1.coeffs[i] + b * g2.coeffs[i] != v.coeffs[i]) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

RankTwoSubsystem::RankTwoSubsystem(const RootSystem& rs, RootSubset roots) : rs_(&rs), roots_(std::move(roots)) {
  if (roots_.universe() != rs.num_positive()) throw PreconditionError("subsystem universe mismatch");
  IntMatrix span;
  for (auto i : roots_.indices()) span.push_back(as_int_vector(rs.root(i)));
  const IntMatrix basis = linalg::canonical_rref(span);
  if (basis.size() != 2) throw PreconditionError("root subset does not span a plane: not a rank-2 localization");
  for (std::size_t i = 0; i < rs.num_positive(); ++i) {
    if (!roots_.contains(i) && linalg::in_row_space(basis, as_int_vector(rs.root(i)))) {
      throw PreconditionError("root subset is not closed in its span: not a rank-2 localization");
    }
  }
  const auto members = roots_.indices();
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      bool ok = true;
      for (auto m : members) {
        Rational a, b;
        if (!solve_pair(rs.root(members[x]), rs.root(members[y]), rs.root(m), a, b) || a < 0 || b < 0 ||
            a.get_den() != 1 || b.get_den() != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        simple_[0] = members[x];
        simple_[1] = members[y];
        return;
      }
    }
  }
  throw InvariantViolation("rank-2 subsystem without a simple system");
}

std::pair<long, long> RankTwoSubsystem::coordinates(std::size_t i) const {
  Rational a, b;
  if (!solve_pair(rs_->root(simple_[0]), rs_->root(simple_[1]), rs_->root(i), a, b)) {
    throw PreconditionError("root is not in the subsystem span");
  }
  return {a.get_num().get_si(), b.get_num().get_si()};
}

bool RankTwoSubsystem::leq(std::size_t beta, std::size_t alpha) const {
  const auto [a1, b1] = coordinates(alpha);
  const auto [a0, b0] = coordinates(beta);
  return a1 >= a0 && b1 >= b0;
}

bool RankTwoSubsystem::is_ideal(const RootSubset& s) const {
  for (auto a : roots_.indices()) {
    if (!s.contains(a)) continue;
    for (auto b : roots_.indices()) {
      if (!s.contains(b) && leq(b, a)) return false;
    }
  }
  for (auto a : s.indices()) {
    if (!roots_.contains(a)) return false;
  }
  return true;
}

std::vector<RankTwoSubsystem> rank_two_subsystems(const RootSystem& rs) {
  const std::size_t n = rs.num_positive();
  std::set<RootSubset> seen;
  std::vector<RankTwoSubsystem> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntMatrix basis = linalg::canonical_rref({as_int_vector(rs.root(i)), as_int_vector(rs.root(j))});
      RootSubset s(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (linalg::in_row_space(basis, as_int_vector(rs.root(r)))) s.insert(r);
      }
      if (seen.insert(s).second) out.emplace_back(rs, std::move(s));
    }
  }
  return out;
}

RootSubset localize_ideal(const Ideal& ideal, const RankTwoSubsystem& psi) {
  RootSubset out(psi.roots().universe());
  for (auto i : psi.roots().indices()) {
    if (ideal.members().contains(i)) out.insert(i);
  }
  return out;
}

}  // namespace idealshi
