#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "sklift/exactnum/matrix.hpp"
#include "sklift/io/record.hpp"

namespace sklift {

// Directory of serialized records keyed by a hash of their construction
// parameters. Writers go through a temp file and an atomic rename, so
// concurrent writers of one key leave one complete entry; readers treat a
// missing or unreadable entry as a miss.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);
  // $SKLIFT_CACHE_DIR, else ./.sklift-cache
  static DiskCache from_env();

  const std::filesystem::path& dir() const { return dir_; }
  static std::string key_for(const nlohmann::json& params);
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& text) const;

  std::optional<FormRecord> get_record(const nlohmann::json& params) const;
  void put_record(const FormRecord& r) const;  // keyed by r.params

 private:
  std::filesystem::path dir_;
};

// T(l) in the Miller basis of weight w at precision prec, through the cache.
// `hit` reports whether the entry was already present.
QMatrix cached_hecke_matrix(const DiskCache& cache, int w, unsigned long ell, std::size_t prec, bool* hit = nullptr);

}  // namespace sklift
