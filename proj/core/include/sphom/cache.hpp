#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "sphom/symfunc.hpp"

namespace sphom {

// Persistent records for the expensive intermediates: Lie and derivation
// characters, exterior plethysms e_m[f_k], and Littlewood series slices.
enum class CacheKind { lie, derivation, extpleth, littlewood };

struct CacheKey {
  CacheKind kind = CacheKind::extpleth;
  unsigned k = 0;  // weight index (lie/derivation/extpleth) or degree (littlewood)
  unsigned m = 0;  // exterior power; only meaningful for extpleth

  std::string file_name() const;  // e.g. "extpleth-k3-m2.symc"
  std::string label() const;      // e.g. "extpleth k=3 m=2", embedded in the record
};

std::uint64_t fnv1a64(std::string_view bytes);

// One file per record under a user-chosen directory. Records carry the
// engine version and a checksum of the payload; anything that fails
// validation is discarded so the caller recomputes. Writes go through a
// temporary file and rename, so a crashed run never leaves a partial
// record behind.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  std::optional<SymmetricFunction> load(const CacheKey& key) const;
  void store(const CacheKey& key, const SymmetricFunction& value) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

struct StoreStats {
  std::uint64_t memory_hits = 0;
  std::uint64_t disk_hits = 0;
  std::uint64_t computed = 0;
};

// Shared, write-once store for derivation characters and their exterior
// plethysms. Handles are shared_ptr so long chain computations can hold
// factors without copying; entries are published under the lock exactly
// once. The Newton recurrence for e_m[f_k] produces every lower power on
// the way up, and all of them are retained (and persisted when a disk
// cache is attached).
class PlethysmStore {
 public:
  PlethysmStore() = default;
  explicit PlethysmStore(DiskCache disk) : disk_(std::move(disk)) {}

  using Handle = std::shared_ptr<const SymmetricFunction>;

  Handle derivation(unsigned k);            // f_k
  Handle exterior(unsigned k, unsigned m);  // e_m[f_k]

  StoreStats stats() const;
  const std::optional<DiskCache>& disk() const { return disk_; }

 private:
  Handle exterior_locked(unsigned k, unsigned m, std::unique_lock<std::mutex>& lock);

  mutable std::mutex mutex_;
  std::map<unsigned, Handle> derivations_;
  std::map<std::pair<unsigned, unsigned>, Handle> exteriors_;
  std::optional<DiskCache> disk_;
  StoreStats stats_;
};

}  // namespace sphom
