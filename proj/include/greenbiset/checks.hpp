#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenbiset/functor.hpp"
#include "greenbiset/matrix.hpp"

namespace gb {

enum class Verdict { Pass, Fail, OutOfScopeLimit };
std::string to_string(Verdict v);

/// Outcome of one certificate. Witness data is exact (scalars as strings).
struct CheckReport {
  std::string check;
  std::string spec;
  std::vector<std::string> scope;
  Verdict verdict = Verdict::Pass;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  std::vector<std::string> caveats;

  nlohmann::ordered_json to_json() const;
};

inline constexpr const char* kCatalogCaveat = "catalog-bounded certificate";

nlohmann::ordered_json to_json(const Vec& v);
nlohmann::ordered_json to_json(const Matrix& m);

/// Catalog groups up to isomorphism with order <= n, ordered by order.
std::vector<std::string> catalog_up_to(std::size_t n);

CheckReport is_field_at_one(const Functor& a);

/// b with b o a = epsilon_A for a in A(H), i.e. a morphism 1 -> H; nullopt
/// when none exists. Throws InvalidArgument on a = 0.
std::optional<Vec> left_inverse(const Functor& a, const GroupRef& h, const Vec& x);

CheckReport green_field_certificate(const Functor& a, const std::vector<std::string>& catalog);

/// Positive-definiteness of the Gram of <-,->_{L,L} over Q; for the
/// representation functors also the character-formula dual.
CheckReport anisotropy_check(const Functor& a, const GroupRef& l);

/// Trace-form radical of (A(L x L), o). Characteristic 0 only.
CheckReport endo_semisimplicity(const Functor& a, const GroupRef& l);

CheckReport strict_condition6(const Functor& a, const GroupRef& g, const GroupRef& h);

struct EssentialDim {
  std::size_t dim_hh = 0;
  std::size_t ideal_dim = 0;
  std::size_t essential = 0;
  std::vector<std::string> smaller;  // the groups K used
};
/// dim A(H x H) minus the dimension of the ideal of morphisms factoring
/// through catalog groups of smaller order.
EssentialDim essential_dim(const Functor& a, const GroupRef& h);

/// Rank of A(G) (x) M(H) -> M(G x H), alpha (x) m -> alpha x m, for
/// M = shift(A, L).
CheckReport tensor_injectivity(const Functor& a, const GroupRef& g, const GroupRef& l, const GroupRef& h);

}  // namespace gb
