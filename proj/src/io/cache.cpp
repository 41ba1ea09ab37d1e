#include "sklift/io/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "sklift/level1/level1.hpp"

namespace sklift {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

DiskCache DiskCache::from_env() {
  const char* env = std::getenv("SKLIFT_CACHE_DIR");
  return DiskCache(env && *env ? fs::path(env) : fs::path(".sklift-cache"));
}

std::string DiskCache::key_for(const nlohmann::json& params) { return hex64(fnv1a64(params.dump())); }

fs::path DiskCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> DiskCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return ss.str();
}

void DiskCache::put(const std::string& key, const std::string& text) const {
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  std::ostringstream tmpname;
  tmpname << key << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
          << counter++;
  const fs::path tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // unwritable cache: behave as a cache miss next time
    out << text;
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path_for(key), ec);
  if (ec) fs::remove(tmp, ec);
}

std::optional<FormRecord> DiskCache::get_record(const nlohmann::json& params) const {
  auto text = get(key_for(params));
  if (!text) return std::nullopt;
  try {
    auto r = parse_record(*text);
    if (r.params != params) return std::nullopt;  // hash collision
    return r;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

void DiskCache::put_record(const FormRecord& r) const { put(key_for(r.params), serialize(r)); }

QMatrix cached_hecke_matrix(const DiskCache& cache, int w, unsigned long ell, std::size_t prec, bool* hit) {
  nlohmann::json params = {{"op", "hecke_matrix"},
                           {"weight", std::to_string(w)},
                           {"ell", std::to_string(ell)},
                           {"prec", std::to_string(prec)}};
  if (auto r = cache.get_record(params)) {
    if (hit) *hit = true;
    return matrix_from_record(*r);
  }
  if (hit) *hit = false;
  QMatrix M = hecke_matrix(w, ell, prec);
  cache.put_record(matrix_record(M, w, params));
  return M;
}

}  // namespace sklift
