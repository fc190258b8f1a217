#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qseries {

// On-disk coefficient cache; versioned text format, one decimal coefficient
// string per line.  Disabled when the directory is empty.  A hit requires an
// exact key match and a stored order >= the requested one.
class SeriesCache {
 public:
  static constexpr const char* kEnvVar = "ETAQ_CACHE_DIR";

  explicit SeriesCache(std::string dir) : dir_(std::move(dir)) {}

  static SeriesCache from_env();

  bool enabled() const { return !dir_.empty(); }

  // Returns the first N+1 cached coefficient strings, or nullopt on miss.
  std::optional<std::vector<std::string>> load(const std::string& key, long N) const;

  void store(const std::string& key, long N, const std::vector<std::string>& coeffs) const;

 private:
  std::string path_for(const std::string& key) const;

  std::string dir_;
};

}  // namespace qseries
