#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "greenbiset/checks.hpp"
#include "greenbiset/functor.hpp"

namespace gb {

/// Conjugacy classes of subgroups of G x K whose second projection is onto K.
std::size_t count_surjecting_classes(const GroupRef& g, const GroupRef& k);

/// The non-strict field e_K^K QB_K for K = Cp x Cp, evaluated at Cp and
/// Cp x Cp by two routes, plus the strictness check at (Cp, Cp).
struct Example3Result {
  unsigned p = 0;
  std::string spec;
  std::size_t dim_g_rank = 0, dim_g_count = 0;    // at Cp
  std::size_t dim_gg_rank = 0, dim_gg_count = 0;  // at Cp x Cp
  std::size_t formula_g = 0, formula_gg = 0;      // p^2+1 and p^4+p^3+p^2+1
  long deficit_formula = 0;                       // p^2(p-1)
  CheckReport strict;

  bool routes_agree() const { return dim_g_rank == dim_g_count && dim_gg_rank == dim_gg_count; }
  /// Both routes match the closed forms and strictness fails by exactly the
  /// expected deficit.
  bool reproduced() const;
  nlohmann::ordered_json to_json() const;
};

/// p must be a prime with p^4 within the enumeration bound.
Example3Result run_example3(unsigned p);

/// The functor spec used for a given p.
std::string example3_spec(unsigned p);

}  // namespace gb
