#include "qseries/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qseries {

namespace {

constexpr const char* kMagic = "etaq-cache 1";

// FNV-1a; filenames only — the key is re-checked inside the file.
std::string key_hash(const std::string& key) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

SeriesCache SeriesCache::from_env() {
  const char* dir = std::getenv(kEnvVar);
  return SeriesCache(dir ? dir : "");
}

std::string SeriesCache::path_for(const std::string& key) const {
  return dir_ + "/" + key_hash(key) + ".txt";
}

std::optional<std::vector<std::string>> SeriesCache::load(const std::string& key, long N) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return std::nullopt;
  if (!std::getline(in, line) || line != "key " + key) return std::nullopt;
  long order = -1;
  if (!std::getline(in, line) || line.rfind("order ", 0) != 0) return std::nullopt;
  order = std::stol(line.substr(6));
  if (order < N) return std::nullopt;
  std::vector<std::string> coeffs;
  coeffs.reserve(static_cast<std::size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) {
    if (!std::getline(in, line)) return std::nullopt;
    coeffs.push_back(line);
  }
  return coeffs;
}

void SeriesCache::store(const std::string& key, long N, const std::vector<std::string>& coeffs) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;  // cache is best-effort
  std::string path = path_for(key);
  std::ostringstream body;
  body << kMagic << "\n"
       << "key " << key << "\n"
       << "order " << N << "\n";
  for (const auto& c : coeffs) body << c << "\n";
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << body.str();
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace qseries
