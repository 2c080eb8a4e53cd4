#include "sphom/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "sphom/lie.hpp"
#include "sphom/serialize.hpp"
#include "sphom/version.hpp"

namespace sphom {

namespace {

const char* kind_name(CacheKind kind) {
  switch (kind) {
    case CacheKind::lie: return "lie";
    case CacheKind::derivation: return "derivation";
    case CacheKind::extpleth: return "extpleth";
    case CacheKind::littlewood: return "littlewood";
  }
  return "unknown";
}

}  // namespace

std::string CacheKey::file_name() const {
  std::ostringstream out;
  out << kind_name(kind) << "-k" << k;
  if (kind == CacheKind::extpleth) out << "-m" << m;
  out << ".symc";
  return out.str();
}

std::string CacheKey::label() const {
  std::ostringstream out;
  out << kind_name(kind) << " k=" << k;
  if (kind == CacheKind::extpleth) out << " m=" << m;
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

namespace {

std::string checksum_line(std::string_view payload) {
  std::ostringstream out;
  out << "checksum=fnv1a64:" << std::hex << fnv1a64(payload);
  return out.str();
}

// Pops the next line (without terminator) off the front of `text`.
std::string_view take_line(std::string_view& text) {
  auto eol = text.find('\n');
  std::string_view line = text.substr(0, eol);
  text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
  return line;
}

}  // namespace

std::optional<SymmetricFunction> DiskCache::load(const CacheKey& key) const {
  auto path = dir_ / key.file_name();
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;  // cold cache, not an error
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string contents = buffer.str();

  auto reject = [&](const char* why) -> std::optional<SymmetricFunction> {
    std::cerr << "cache: discarding " << path.string() << " (" << why << ")\n";
    return std::nullopt;
  };

  std::string_view rest = contents;
  if (take_line(rest) != "SYMCACHE v1") return reject("bad magic");
  if (take_line(rest) != std::string("engine=") + kEngineVersion) {
    return reject("engine version mismatch");
  }
  if (take_line(rest) != "key=" + key.label()) return reject("key mismatch");
  std::string_view checksum = take_line(rest);
  if (take_line(rest) != "---") return reject("bad record framing");
  if (checksum != checksum_line(rest)) return reject("checksum mismatch");

  try {
    return symfunc_from_text(rest);
  } catch (const std::invalid_argument& err) {
    return reject(err.what());
  }
}

void DiskCache::store(const CacheKey& key, const SymmetricFunction& value) const {
  std::string payload = symfunc_to_text(value);
  auto path = dir_ / key.file_name();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << "SYMCACHE v1\n"
        << "engine=" << kEngineVersion << "\n"
        << "key=" << key.label() << "\n"
        << checksum_line(payload) << "\n"
        << "---\n"
        << payload;
    if (!out) {
      std::cerr << "cache: failed to write " << tmp.string() << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::cerr << "cache: failed to publish " << path.string() << ": " << ec.message() << "\n";
}

PlethysmStore::Handle PlethysmStore::derivation(unsigned k) {
  std::unique_lock lock(mutex_);
  if (auto it = derivations_.find(k); it != derivations_.end()) {
    ++stats_.memory_hits;
    return it->second;
  }
  CacheKey key{CacheKind::derivation, k, 0};
  if (disk_) {
    if (auto loaded = disk_->load(key)) {
      ++stats_.disk_hits;
      auto handle = std::make_shared<const SymmetricFunction>(std::move(*loaded));
      derivations_.emplace(k, handle);
      return handle;
    }
  }
  ++stats_.computed;
  lock.unlock();  // character computation does not touch the store
  auto computed = std::make_shared<const SymmetricFunction>(derivation_character(k).character);
  lock.lock();
  auto [it, inserted] = derivations_.emplace(k, computed);
  if (inserted && disk_) disk_->store(key, *computed);
  return it->second;
}

PlethysmStore::Handle PlethysmStore::exterior(unsigned k, unsigned m) {
  std::unique_lock lock(mutex_);
  return exterior_locked(k, m, lock);
}

PlethysmStore::Handle PlethysmStore::exterior_locked(unsigned k, unsigned m,
                                                     std::unique_lock<std::mutex>& lock) {
  if (auto it = exteriors_.find({k, m}); it != exteriors_.end()) {
    ++stats_.memory_hits;
    return it->second;
  }
  CacheKey key{CacheKind::extpleth, k, m};
  if (disk_) {
    if (auto loaded = disk_->load(key)) {
      ++stats_.disk_hits;
      auto handle = std::make_shared<const SymmetricFunction>(std::move(*loaded));
      exteriors_.emplace(std::make_pair(k, m), handle);
      return handle;
    }
  }
  if (m == 0) {
    ++stats_.computed;
    auto handle = std::make_shared<const SymmetricFunction>(SymmetricFunction::one());
    exteriors_.emplace(std::make_pair(k, m), handle);
    return handle;
  }

  // Newton step: m·e_m[f] = Σ_{r=1}^{m} (-1)^{r-1} p_r[f] · e_{m-r}[f].
  // Recursing through the store retains (and persists) every lower power.
  std::vector<Handle> lower(m);  // lower[j] = e_j[f_k]
  for (unsigned j = 0; j < m; ++j) lower[j] = exterior_locked(k, j, lock);
  ++stats_.computed;
  lock.unlock();
  Handle f = derivation(k);
  SymmetricFunction acc;
  for (unsigned r = 1; r <= m; ++r) {
    SymmetricFunction term = plethysm_power(r, *f) * (*lower[m - r]);
    if (r % 2 == 0) term *= Rational(-1);
    acc += term;
  }
  acc *= make_rational(1, static_cast<long>(m));
  auto computed = std::make_shared<const SymmetricFunction>(std::move(acc));
  lock.lock();
  auto [it, inserted] = exteriors_.emplace(std::make_pair(k, m), computed);
  if (inserted && disk_) disk_->store(key, *computed);
  return it->second;
}

StoreStats PlethysmStore::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

}  // namespace sphom
