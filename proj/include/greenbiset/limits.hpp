#pragma once

#include <cstddef>
#include <string>

namespace gb {

/// Size guards. `enumeration` caps catalog groups and anything whose subgroup
/// lattice is enumerated; `intermediate` caps direct products that are only
/// handled element-wise (compose intermediates, shifted evaluations).
struct Limits {
  std::size_t enumeration = 256;
  std::size_t intermediate = 4096;
};

Limits limits();
void set_limits(const Limits& l);

/// Throws BoundExceeded naming `what` when n > bound; `knob` is the flag
/// that raises the bound, empty for fixed limits.
void require_within(std::size_t n, std::size_t bound, const std::string& what, const std::string& knob = "--bound");

}  // namespace gb
