#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "phantom/ring/groebner.hpp"

namespace phantom {

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t disk_hits = 0;
  std::uint64_t disk_writes = 0;
  std::uint64_t corrupt = 0;
};

// Content-addressed store of reduced Groebner bases. The key is the ring
// signature, the rank and the sorted generator list, so equal submodules given
// by equal generating lists share one entry. With a directory set, entries are
// also persisted; a file whose key or checksum does not match is recomputed.
class GroebnerCache {
 public:
  static GroebnerCache& global();

  BasisPtr get(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& generators);

  void set_directory(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> directory() const;
  void set_enabled(bool enabled);
  void clear();
  CacheStats stats() const;

  static std::string canonical_key(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& generators);
  static std::string digest(const std::string& text);

 private:
  BasisPtr load(const std::filesystem::path& file, const std::string& key, const RingPtr& ring, std::size_t rank);
  void store(const std::filesystem::path& file, const std::string& key, const GroebnerBasis& basis);

  mutable std::mutex mutex_;
  std::unordered_map<std::string, BasisPtr> memory_;
  std::optional<std::filesystem::path> directory_;
  bool enabled_ = true;
  CacheStats stats_;
};

}  // namespace phantom
