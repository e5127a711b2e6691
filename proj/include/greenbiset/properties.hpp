#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenbiset/functor.hpp"

namespace gb {

struct PropertyConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 200;  // per identity
  std::size_t max_order = 6;    // of the sampled groups
};

struct PropertyOutcome {
  std::string identity;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> groups;  // every group that occurred, sorted
  nlohmann::ordered_json first_failure;  // null when none

  bool passed() const { return failures == 0 && instances > 0; }
  nlohmann::ordered_json to_json() const;
};

/// Names of the identities, in the order run_property_suites reports them.
/// "cut-stability" only applies to cut functors.
std::vector<std::string> property_names(const Functor& a);

/// Runs every identity on `instances` seeded random basis instances. Each
/// identity has its own generator stream, so results do not depend on which
/// other identities run.
std::vector<PropertyOutcome> run_property_suites(const FunctorRef& a, const PropertyConfig& cfg);
PropertyOutcome run_property(const FunctorRef& a, const std::string& identity, const PropertyConfig& cfg);

/// One random elemental factor starting at g: Res to a subgroup, Def by a
/// normal subgroup, or (when allowed) Ind / Inf into g x C2.
Elemental random_elemental(std::mt19937_64& rng, const GroupRef& g, bool allow_growth);

}  // namespace gb
