#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "idealshi/arrangement.hpp"
#include "idealshi/rootsys.hpp"

namespace oracle {

using Vec = std::vector<long>;
using Mat = std::vector<std::vector<long>>;

// Gram matrix of simple roots, short roots of squared length 2 (long 4 or 6).
inline Mat gram(char family, int n) {
  Mat g(n, std::vector<long>(n, 0));
  auto link = [&](int i, int j, long v) { g[i][j] = g[j][i] = v; };
  switch (family) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // a_n short
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':  // a_n long
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'F':  // a1, a2 long
      g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case 'G':  // a1 short
      g = {{2, -3}, {-3, 6}};
      break;
  }
  return g;
}

inline long norm(const Mat& g, const Vec& v) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * g[i][j] * v[j];
  return s;
}

// Positive roots as the nonnegative lattice vectors of root length. Valid for
// the types where the root lattice has no other vectors of those lengths
// (all of A, B, D, G2, F4, C2, C3; not C_n for n >= 4).
inline std::set<Vec> positive_roots_by_norm(char family, int n, long box = 4) {
  const Mat g = gram(family, n);
  long lo = g[0][0], hi = g[0][0];
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, g[i][i]);
    hi = std::max(hi, g[i][i]);
  }
  std::set<Vec> out;
  Vec v(n, 0);
  while (true) {
    int i = 0;
    while (i < n && v[i] == box) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    const long q = norm(g, v);
    if (q == lo || q == hi) out.insert(v);
  }
  return out;
}

inline bool dominated(const std::vector<int>& beta, const std::vector<int>& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] < beta[i]) return false;
  return true;
}

// Every subset of Phi+ that is closed downward, by exhaustive search.
inline std::vector<std::vector<bool>> ideals_by_brute_force(const idealshi::RootSystem& rs) {
  const std::size_t n = rs.num_positive();
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (!(mask >> b & 1) && dominated(rs.root(b).coeffs, rs.root(a).coeffs)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<bool> bits(n);
    for (std::size_t a = 0; a < n; ++a) bits[a] = mask >> a & 1;
    out.push_back(bits);
  }
  return out;
}

// Conjugate partition: the j-th largest exponent is #{i : f_i >= j}.
inline std::vector<long> dual_partition(const std::vector<long>& values, long d) {
  std::map<long, long> f;
  for (long v : values) ++f[v];
  std::vector<long> out;
  for (long j = 1; j <= d; ++j) {
    long c = 0;
    for (auto [i, fi] : f)
      if (fi >= j) ++c;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// |F_q^n minus the union of A| by visiting every point.
inline long count_complement(const idealshi::Arrangement& a, long q) {
  const std::size_t n = a.ambient_dim();
  std::vector<std::vector<long>> forms;
  for (const auto& h : a.hyperplanes()) {
    std::vector<long> f;
    for (const auto& x : h.entries()) {
      long r = x.get_si() % q;
      f.push_back(r < 0 ? r + q : r);
    }
    forms.push_back(f);
  }
  std::vector<long> p(n, 0);
  long count = 0;
  while (true) {
    bool off = true;
    for (const auto& f : forms) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += f[i] * p[i];
      if (s % q == 0) {
        off = false;
        break;
      }
    }
    count += off;
    std::size_t i = 0;
    while (i < n && p[i] == q - 1) p[i++] = 0;
    if (i == n) break;
    ++p[i];
  }
  return count;
}

// Hyperplanes of an explicit Shi description, written out from the
// definition with no shared code.
inline std::set<std::vector<long>> shi_by_definition(const idealshi::RootSystem& rs, long k,
                                                     const std::vector<bool>& subset, bool plus) {
  auto primitive = [](std::vector<long> v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::labs(x));
    for (long& x : v) x /= g;
    for (long x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (long& y : v) y = -y;
      break;
    }
    return v;
  };
  std::set<std::vector<long>> out;
  const int l = rs.rank();
  std::vector<long> z(l + 1, 0);
  z[l] = 1;
  out.insert(z);
  for (std::size_t i = 0; i < rs.num_positive(); ++i) {
    std::vector<long> c(rs.root(i).coeffs.begin(), rs.root(i).coeffs.end());
    auto plane = [&](long j) {
      auto v = c;
      v.push_back(-j);
      return primitive(v);
    };
    for (long j = 1 - k; j <= k; ++j) {
      if (!plus && subset[i] && j == k) continue;
      out.insert(plane(j));
    }
    if (plus && subset[i]) out.insert(plane(-k));
  }
  return out;
}

}  // namespace oracle
