#include "greenbiset/limits.hpp"

#include <mutex>

#include "greenbiset/error.hpp"

namespace gb {

namespace {
std::mutex mu;
Limits current;
}  // namespace

Limits limits() {
  std::lock_guard lock(mu);
  return current;
}

void set_limits(const Limits& l) {
  if (l.enumeration < 1 || l.intermediate < 1) throw InvalidArgument("bounds must be at least 1");
  std::lock_guard lock(mu);
  current = l;
}

void require_within(std::size_t n, std::size_t bound, const std::string& what, const std::string& knob) {
  if (n <= bound) return;
  std::string msg = what + " has order " + std::to_string(n) + ", above the bound " + std::to_string(bound);
  if (!knob.empty()) msg += " (raise it with " + knob + " or the config file)";
  throw BoundExceeded(msg);
}

}  // namespace gb
