#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

namespace gb::cache {

/// Bumping this invalidates every file written by older builds.
inline constexpr int kVersion = 1;

/// Directory for on-disk entries; nullopt keeps everything in memory.
void set_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> directory();

/// Counters for tests and diagnostics.
struct Stats {
  std::size_t hits = 0, misses = 0, rebuilds = 0, write_failures = 0;
};
Stats stats();
void reset_stats();

/// Payload for (kind, key). Reads `<dir>/<kind>-<key>.json`; when missing,
/// unreadable, corrupt or of another version, calls `build` and writes the
/// result atomically (temp file, then rename). A write failure is reported on
/// stderr once and the value is returned anyway.
nlohmann::json get_or_build(const std::string& kind, const std::string& key,
                            const std::function<nlohmann::json()>& build);

/// File name used for (kind, key); keys are sanitized.
std::filesystem::path entry_path(const std::filesystem::path& dir, const std::string& kind, const std::string& key);

}  // namespace gb::cache
