#include "idealshi/lattice_cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace idealshi {

namespace {

std::vector<std::vector<std::string>> covector_strings(const Arrangement& a) {
  std::vector<std::vector<std::string>> out;
  for (const auto& h : a.sorted()) {
    std::vector<std::string> row;
    for (const auto& x : h.entries()) row.push_back(x.get_str());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

LatticeCache::LatticeCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string LatticeCache::key(const Arrangement& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  feed(std::to_string(a.ambient_dim()) + ":");
  for (const auto& c : a.sorted()) feed(c.to_string() + ";");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path LatticeCache::path_for(const Arrangement& a) const { return dir_ / (key(a) + ".json"); }

std::optional<CachedLattice> LatticeCache::load(const Arrangement& a) const {
  std::ifstream in(path_for(a));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != kVersion) return std::nullopt;
    if (j.at("ambient_dim").get<std::size_t>() != a.ambient_dim()) return std::nullopt;
    if (j.at("covectors").get<std::vector<std::vector<std::string>>>() != covector_strings(a)) return std::nullopt;
    std::vector<BigInt> coeffs;
    for (const auto& s : j.at("chi").get<std::vector<std::string>>()) coeffs.emplace_back(s);
    return CachedLattice{Polynomial(std::move(coeffs)), j.at("level_sizes").get<std::vector<std::size_t>>()};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void LatticeCache::store(const Arrangement& a, const CachedLattice& entry) const {
  nlohmann::json j;
  j["format"] = "idealshi-lattice-cache";
  j["version"] = kVersion;
  j["ambient_dim"] = a.ambient_dim();
  j["covectors"] = covector_strings(a);
  j["chi"] = entry.chi.coeff_strings();
  j["level_sizes"] = entry.level_sizes;
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << key(a) << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path_for(a));
}

}  // namespace idealshi
