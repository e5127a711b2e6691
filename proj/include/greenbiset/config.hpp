#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gb {

enum class OutputFormat { Text, Json };

struct Config {
  std::size_t bound = 256;
  std::size_t intermediate_bound = 4096;
  std::vector<std::string> catalog;  // empty: every catalog group of order <= 12
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  std::size_t instances = 200;
  std::size_t max_order = 6;

  std::vector<std::string> catalog_or_default() const;
};

/// key = value lines; '#' starts a comment. Keys: bound, intermediate_bound,
/// catalog (comma separated), cache_dir, format (text|json), seed,
/// instances, max_order. Throws InvalidArgument on unknown keys or values.
Config parse_config(std::string_view text, Config base = {});
Config load_config(const std::filesystem::path& file, Config base = {});

/// GREENBISET_CACHE_DIR, else $XDG_CACHE_HOME/greenbiset, else
/// $HOME/.cache/greenbiset; nullopt when none of these is set.
std::optional<std::filesystem::path> default_cache_dir();

/// Installs the bounds and the cache directory.
void apply_config(const Config& c);

OutputFormat parse_format(std::string_view s);

}  // namespace gb
