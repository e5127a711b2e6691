#include "greenbiset/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "greenbiset/cache.hpp"
#include "greenbiset/checks.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/limits.hpp"

namespace gb {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t to_count(const std::string& key, const std::string& v, std::uint64_t min) {
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v[0] == '-') throw InvalidArgument("config: " + key + " expects a non-negative integer, got '" + v + "'");
  if (n < min) throw InvalidArgument("config: " + key + " must be at least " + std::to_string(min));
  return n;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  throw InvalidArgument("unknown format '" + std::string(s) + "' (text or json)");
}

std::vector<std::string> Config::catalog_or_default() const { return catalog.empty() ? catalog_up_to(12) : catalog; }

Config parse_config(std::string_view text, Config c) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string val = trim(std::string_view(line).substr(eq + 1));
    if (key == "bound") {
      c.bound = to_count(key, val, 1);
    } else if (key == "intermediate_bound") {
      c.intermediate_bound = to_count(key, val, 1);
    } else if (key == "catalog") {
      c.catalog.clear();
      std::istringstream items(val);
      std::string g;
      while (std::getline(items, g, ','))
        if (auto t = trim(g); !t.empty()) c.catalog.push_back(t);
    } else if (key == "cache_dir") {
      if (val.empty()) c.cache_dir.reset();
      else c.cache_dir = val;
    } else if (key == "format") {
      c.format = parse_format(val);
    } else if (key == "seed") {
      c.seed = to_count(key, val, 0);
    } else if (key == "instances") {
      c.instances = to_count(key, val, 1);
    } else if (key == "max_order") {
      c.max_order = to_count(key, val, 1);
    } else {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

Config load_config(const std::filesystem::path& file, Config base) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read config file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* d = std::getenv("GREENBISET_CACHE_DIR"); d && *d) return std::filesystem::path(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "greenbiset";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "greenbiset";
  return std::nullopt;
}

void apply_config(const Config& c) {
  set_limits({c.bound, c.intermediate_bound});
  cache::set_directory(c.cache_dir);
}

}  // namespace gb
