#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace edgeal {

/// Persistent key -> regularity map shared across runs.
class RegularityStore {
 public:
  virtual ~RegularityStore() = default;
  virtual std::optional<int> get(const std::string& key) = 0;
  virtual void put(const std::string& key, int value) = 0;
};

/// One small JSON file per key under dir, named by a hash of the key; the
/// key is stored inside and checked on read. Writes go through a temporary
/// file and a rename so concurrent runs never see partial files.
class DiskRegularityStore : public RegularityStore {
 public:
  explicit DiskRegularityStore(std::filesystem::path dir);

  std::optional<int> get(const std::string& key) override;
  void put(const std::string& key, int value) override;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path file_for(const std::string& key) const;

  std::filesystem::path dir_;
  std::mutex mu_;
};

/// $EDGEAL_CACHE_DIR, else $XDG_CACHE_HOME/edgeal, else $HOME/.cache/edgeal.
std::filesystem::path default_cache_dir();

}  // namespace edgeal
