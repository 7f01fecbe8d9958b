#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "unidescent/symchar.hpp"

namespace unidescent {

inline constexpr int kCacheVersion = 1;

// Default cache file location: $UNIDESCENT_CACHE, else
// $XDG_CACHE_HOME/unidescent/chartables.json, else
// $HOME/.cache/unidescent/chartables.json. Empty when none resolves.
std::filesystem::path default_cache_path();

// Parses a cache file into character tables. A missing file, a version
// mismatch or unparsable content yields an empty result (the cache is
// simply rebuilt); a file that exists but cannot be read throws cache_error.
std::vector<CharacterTable> load_table_cache(const std::filesystem::path& path);

// Serializes tables deterministically (sorted levels, fixed key order,
// integers as decimal strings): two runs that computed the same levels
// produce byte-identical files. Throws cache_error on write failure.
void save_table_cache(const std::filesystem::path& path,
                      const std::vector<std::shared_ptr<const CharacterTable>>& tables);

std::string serialize_table_cache(
    const std::vector<std::shared_ptr<const CharacterTable>>& tables);

}  // namespace unidescent
