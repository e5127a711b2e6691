#include "greenbiset/cache.hpp"

#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>

namespace gb::cache {

namespace {
std::mutex mu;
std::optional<std::filesystem::path> dir_;
Stats stats_;
bool warned = false;

std::string sanitize(const std::string& key) {
  std::string out;
  for (char c : key) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    if (ok) {
      out += c;
    } else {
      static const char* hex = "0123456789abcdef";
      out += '%';
      out += hex[(static_cast<unsigned char>(c) >> 4) & 15];
      out += hex[static_cast<unsigned char>(c) & 15];
    }
  }
  return out;
}

// FNV-1a over the compact dump; catches edits that keep the JSON valid.
std::string digest(const nlohmann::json& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload.dump()) h = (h ^ c) * 1099511628211ull;
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<nlohmann::json> read_entry(const std::filesystem::path& p, const std::string& kind,
                                         const std::string& key) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kVersion || j.at("kind").get<std::string>() != kind ||
        j.at("key").get<std::string>() != key || j.at("digest").get<std::string>() != digest(j.at("payload")))
      return std::nullopt;
    return j.at("payload");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool write_entry(const std::filesystem::path& p, const std::string& kind, const std::string& key,
                 const nlohmann::json& payload) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  std::random_device rd;
  const auto tmp = p.parent_path() / (p.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << nlohmann::json{{"version", kVersion}, {"kind", kind}, {"key", key}, {"digest", digest(payload)}, {"payload", payload}}.dump();
    if (!out) return false;
  }
  std::filesystem::rename(tmp, p, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace

void set_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mu);
  dir_ = std::move(dir);
  warned = false;
}

std::optional<std::filesystem::path> directory() {
  std::lock_guard lock(mu);
  return dir_;
}

Stats stats() {
  std::lock_guard lock(mu);
  return stats_;
}

void reset_stats() {
  std::lock_guard lock(mu);
  stats_ = {};
}

std::filesystem::path entry_path(const std::filesystem::path& dir, const std::string& kind, const std::string& key) {
  return dir / (sanitize(kind) + "-" + sanitize(key) + ".json");
}

nlohmann::json get_or_build(const std::string& kind, const std::string& key,
                            const std::function<nlohmann::json()>& build) {
  const auto dir = directory();
  if (!dir) return build();
  const auto path = entry_path(*dir, kind, key);
  const bool existed = std::filesystem::exists(path);
  if (auto hit = read_entry(path, kind, key)) {
    std::lock_guard lock(mu);
    ++stats_.hits;
    return *hit;
  }
  nlohmann::json payload = build();
  const bool ok = write_entry(path, kind, key, payload);
  std::lock_guard lock(mu);
  ++stats_.misses;
  if (existed) ++stats_.rebuilds;
  if (!ok) {
    ++stats_.write_failures;
    if (!warned) {
      std::cerr << "warning: cache directory " << dir->string() << " is not writable; continuing in memory\n";
      warned = true;
    }
  }
  return payload;
}

}  // namespace gb::cache
