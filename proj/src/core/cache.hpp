#pragma once

// On-disk cache of enumeration results, one JSON document per key.

#include "harness.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace stacksort {

inline constexpr std::string_view kCacheVersion = "stacksort-1";

struct CacheKey {
  std::string sigma;
  std::string tau;  // empty for a single-stack machine
  int n = 0;
  bool witnesses = false;

  // Canonical text that the file name is hashed from.
  std::string canonical(std::string_view version) const;
};

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

class ResultCache {
public:
  // Warnings about unreadable entries go to `warnings` when it is non-null.
  explicit ResultCache(std::filesystem::path directory, std::string version = std::string(kCacheVersion),
                       std::ostream* warnings = nullptr);

  const std::filesystem::path& directory() const noexcept { return directory_; }

  std::filesystem::path path_for(const CacheKey& key) const;

  // Miss on absent, stale, corrupt or mismatched entries.
  std::optional<EnumerationResult> load(const CacheKey& key) const;

  // Write-temp-then-rename. Throws Io on failure.
  void store(const CacheKey& key, const EnumerationResult& result) const;

private:
  void warn(const std::string& message) const;

  std::filesystem::path directory_;
  std::string version_;
  std::ostream* warnings_;
};

} // namespace stacksort
