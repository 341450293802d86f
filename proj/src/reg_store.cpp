#include "edgeal/reg_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace edgeal {

namespace fs = std::filesystem;

DiskRegularityStore::DiskRegularityStore(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

fs::path DiskRegularityStore::file_for(const std::string& key) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ULL;
  std::ostringstream name;
  name << std::hex << h << ".json";
  return dir_ / name.str();
}

std::optional<int> DiskRegularityStore::get(const std::string& key) {
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  auto doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.contains("key") || doc["key"] != key || !doc["value"].is_number_integer())
    return std::nullopt;
  return doc["value"].get<int>();
}

void DiskRegularityStore::put(const std::string& key, int value) {
  const fs::path target = file_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::lock_guard lock(mu_);
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"key", key}, {"value", value}}.dump() << '\n';
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

fs::path default_cache_dir() {
  if (const char* dir = std::getenv("EDGEAL_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "edgeal";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "edgeal";
  return fs::temp_directory_path() / "edgeal-cache";
}

}  // namespace edgeal
