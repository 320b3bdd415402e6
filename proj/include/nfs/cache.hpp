#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "nfs/finite_field.hpp"

namespace nfs {

/// One cache file: a key line, a payload and an FNV-1a checksum of the payload.
struct CacheEntry {
  std::string key;
  std::string payload;
};

std::uint64_t fnv1a(const std::string& data);

/// Writes atomically (temp file + rename); creates the directory on demand.
/// Throws runtime_error naming the path on I/O failure.
void save_entry(const std::filesystem::path& file, const CacheEntry& entry);

/// nullopt if the file is missing, malformed or fails its checksum.
std::optional<CacheEntry> load_entry(const std::filesystem::path& file);

std::string field_cache_key(std::uint32_t p, std::uint32_t e);
std::string serialize_field(const FiniteField& field);
/// Throws invalid_argument if the payload does not describe a valid field.
FiniteField deserialize_field(const std::string& payload);

/// Cache directory: explicit flag value, else $NFS_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Loads GF(p^e) from `dir`, rebuilding (and rewriting the file) on a miss or
/// a corrupt entry. `hit` reports whether the cached copy was used.
FiniteField load_or_build_field(const std::filesystem::path& dir, std::uint32_t p, std::uint32_t e,
                                bool* hit = nullptr);

}  // namespace nfs
