#pragma once

// On-disk cache of characteristic polynomials keyed by the covector set.
// One JSON file per arrangement; the format is internal and versioned.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "idealshi/arrangement.hpp"
#include "idealshi/charpoly.hpp"

namespace idealshi {

struct CachedLattice {
  Polynomial chi;
  std::vector<std::size_t> level_sizes;
};

class LatticeCache {
 public:
  static constexpr int kVersion = 1;

  explicit LatticeCache(std::filesystem::path dir);

  /// FNV-1a hash of the sorted covector list, as 16 hex digits.
  static std::string key(const Arrangement& a);
  std::filesystem::path path_for(const Arrangement& a) const;

  /// Returns nothing on a miss, a version mismatch, or a hash collision.
  std::optional<CachedLattice> load(const Arrangement& a) const;
  void store(const Arrangement& a, const CachedLattice& entry) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace idealshi
