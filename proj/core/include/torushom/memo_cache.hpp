#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "torushom/engine.hpp"

namespace torushom {

struct CacheLoadResult {
  std::size_t loaded = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

struct CacheStoreResult {
  std::size_t appended = 0;
  std::size_t already_present = 0;
};

/// Append-only JSON-lines persistence for a MemoTable.
///
/// Line 1 is a header {"torushom_memo":1,"fingerprint":"..."}; every other
/// line is {"theory","v","w","sigma","value"}. Files written under a
/// different convention fingerprint are refused with FingerprintMismatch.
/// Corrupt record lines are skipped with a warning. A missing or empty file
/// is an empty cache.
CacheLoadResult cache_load(const std::filesystem::path& path, MemoTable& table);

/// Appends every table entry not already in the file (creating it with a
/// header if needed).
CacheStoreResult cache_store(const std::filesystem::path& path, const MemoTable& table);

}  // namespace torushom
