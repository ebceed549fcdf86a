#include "idealshi/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "idealshi/errors.hpp"

namespace idealshi {

// ---------------------------------------------------------------------------
// RootSystemType

bool RootSystemType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string RootSystemType::name() const {
  static constexpr char letters[] = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

std::optional<RootSystemType> RootSystemType::parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') return std::nullopt;
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  RootSystemType t{static_cast<Family>(letter - 'A'), rank};
  if (!t.valid()) return std::nullopt;
  return t;
}

// ---------------------------------------------------------------------------
// Root

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

std::string format_root(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const int c = r.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1) out += std::to_string(c);
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::optional<Root> parse_root(std::string_view text, int rank) {
  Root r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  while (!text.empty()) {
    const auto plus = text.find('+');
    std::string_view term = text.substr(0, plus);
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    if (plus != std::string_view::npos && text.empty()) return std::nullopt;
    const auto a = term.find_first_of("aA");
    if (a == std::string_view::npos) return std::nullopt;
    int coeff = 1;
    if (a > 0) {
      auto [p, ec] = std::from_chars(term.data(), term.data() + a, coeff);
      if (ec != std::errc() || p != term.data() + a || coeff <= 0) return std::nullopt;
    }
    int idx = 0;
    const auto rest = term.substr(a + 1);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), idx);
    if (ec != std::errc() || p != rest.data() + rest.size()) return std::nullopt;
    if (idx < 1 || idx > rank) return std::nullopt;
    r.coeffs[static_cast<std::size_t>(idx - 1)] += coeff;
  }
  if (r.height() == 0) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------------------
// ExponentMultiset

ExponentMultiset::ExponentMultiset(std::vector<long> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end());
}

long ExponentMultiset::sum() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

std::string ExponentMultiset::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// RootSubset

RootSubset RootSubset::all(std::size_t universe) {
  RootSubset s(universe);
  s.bits_.assign(universe, true);
  return s;
}

RootSubset RootSubset::from_indices(std::size_t universe, const std::vector<std::size_t>& idx) {
  RootSubset s(universe);
  for (auto i : idx) s.insert(i);
  return s;
}

std::size_t RootSubset::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> RootSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RootSystem

std::vector<std::vector<int>> gram_matrix(const RootSystemType& type) {
  if (!type.valid()) throw PreconditionError("invalid root system type " + type.name());
  const auto n = static_cast<std::size_t>(type.rank);
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j, int v) { g[i][j] = g[j][i] = v; };
  switch (type.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

namespace {

// Height first; within a height, larger coefficient vectors first so that the
// simple roots come out as alpha_1, ..., alpha_l.
bool canonical_less(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

}  // namespace

RootSystem RootSystem::build(const RootSystemType& type) {
  const auto gram = gram_matrix(type);
  const auto n = static_cast<std::size_t>(type.rank);

  RootSystem rs;
  rs.type_ = type;
  // cartan[i][j] = <alpha_i, alpha_j^vee>; s_j(v) = v - (sum_i v_i cartan[i][j]) alpha_j.
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rs.cartan_[i][j] = 2 * gram[i][j] / gram[j][j];
  }

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      int pairing = 0;
      for (std::size_t i = 0; i < n; ++i) pairing += v[i] * rs.cartan_[i][j];
      auto w = v;
      w[j] -= pairing;
      if (std::any_of(w.begin(), w.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }

  for (const auto& v : seen) rs.roots_.push_back(Root{v});
  std::sort(rs.roots_.begin(), rs.roots_.end(), canonical_less);

  rs.coxeter_ = rs.roots_.back().height() + 1;
  if (2 * rs.roots_.size() != n * static_cast<std::size_t>(rs.coxeter_)) {
    throw InvariantViolation("root closure for " + type.name() + " violates 2|Phi+| = l h");
  }
  rs.heights_.assign(static_cast<std::size_t>(rs.coxeter_) + 1, 0);
  for (const auto& r : rs.roots_) ++rs.heights_[static_cast<std::size_t>(r.height())];
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  const auto it = std::lower_bound(roots_.begin(), roots_.end(), r, canonical_less);
  if (it == roots_.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::vector<std::size_t> RootSystem::simple_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (is_simple(i)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exponent formulas

ExponentMultiset dual_partition(const std::vector<long>& values, long d) {
  if (d < 0) throw PreconditionError("dual_partition: negative dimension");
  std::map<long, long> freq;
  for (long v : values) {
    if (v <= 0) throw PreconditionError("dual_partition: values must be positive, got " + std::to_string(v));
    ++freq[v];
  }
  const long m = freq.empty() ? 0 : freq.rbegin()->first;
  std::vector<long> f(static_cast<std::size_t>(m) + 2, 0);
  for (auto [v, c] : freq) f[static_cast<std::size_t>(v)] = c;
  f[0] = d;
  for (long i = 1; i <= m; ++i) {
    if (f[static_cast<std::size_t>(i)] > f[static_cast<std::size_t>(i - 1)]) {
      throw PreconditionError("dual_partition: level sizes not weakly decreasing at " + std::to_string(i) +
                              " (f_" + std::to_string(i) + "=" + std::to_string(f[static_cast<std::size_t>(i)]) +
                              ", bound " + std::to_string(f[static_cast<std::size_t>(i - 1)]) + ")");
    }
  }
  std::vector<long> parts;
  parts.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i <= m; ++i) {
    const long copies = f[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i + 1)];
    parts.insert(parts.end(), static_cast<std::size_t>(copies), i);
  }
  return ExponentMultiset(std::move(parts));
}

ExponentMultiset weyl_exponents(const RootSystem& rs) {
  std::vector<long> heights;
  for (const auto& r : rs.positive_roots()) heights.push_back(r.height());
  return dual_partition(heights, rs.rank());
}

long ext_height(int root_height, long j, int coxeter_number) {
  if (j > 0) return -static_cast<long>(root_height) + j * coxeter_number + 1;
  return static_cast<long>(root_height) - j * coxeter_number;
}

long ext_height(const Root& root, long j, const RootSystem& rs) {
  return ext_height(root.height(), j, rs.coxeter_number());
}

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::vector<long> shi_ext_heights(const RootSystem& rs, long k, const RootSubset& subset, Sign sign) {
  if (k < 1) throw PreconditionError("k must be positive");
  if (subset.universe() != rs.num_positive()) throw PreconditionError("subset universe mismatch");
  const int h = rs.coxeter_number();
  std::vector<long> values{ext_height_z()};
  for (std::size_t i = 0; i < rs.num_positive(); ++i) {
    const int ht = rs.root(i).height();
    for (long j = 1 - k; j <= k; ++j) {
      if (sign == Sign::Minus && j == k && subset.contains(i)) continue;
      values.push_back(ext_height(ht, j, h));
    }
    if (sign == Sign::Plus && subset.contains(i)) values.push_back(ext_height(ht, -k, h));
  }
  return values;
}

ExponentMultiset shi_exponents_dp(const RootSystem& rs, long k, const RootSubset& subset, Sign sign) {
  return dual_partition(shi_ext_heights(rs, k, subset, sign), rs.rank() + 1);
}

}  // namespace idealshi
