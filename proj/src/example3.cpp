#include "greenbiset/example3.hpp"

#include "greenbiset/error.hpp"
#include "greenbiset/subgroups.hpp"

namespace gb {

std::size_t count_surjecting_classes(const GroupRef& g, const GroupRef& k) {
  const GroupRef gk = direct_product(g, k);
  const GroupHom pr = projection(g, k, 1);
  const auto& lat = subgroup_lattice(gk);
  std::size_t n = 0;
  for (const auto& c : lat.classes())
    if (pr.image(c.representative).size() == k->order()) ++n;
  return n;
}

std::string example3_spec(unsigned p) {
  const std::string c = "C" + std::to_string(p);
  return "cut(shift(burnside(Q), " + c + "x" + c + "), eTop)";
}

bool Example3Result::reproduced() const {
  if (!routes_agree() || dim_g_rank != formula_g || dim_gg_rank != formula_gg) return false;
  if (strict.verdict != Verdict::Fail) return false;
  return strict.witnesses.value("deficit", 0L) == deficit_formula;
}

nlohmann::ordered_json Example3Result::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["spec"] = spec;
  j["dim_Cp"] = {{"rank", dim_g_rank}, {"surjecting_classes", dim_g_count}, {"formula", formula_g}};
  j["dim_CpxCp"] = {{"rank", dim_gg_rank}, {"surjecting_classes", dim_gg_count}, {"formula", formula_gg}};
  j["routes_agree"] = routes_agree();
  j["deficit_formula"] = deficit_formula;
  j["strict"] = strict.to_json();
  j["reproduced"] = reproduced();
  return j;
}

Example3Result run_example3(unsigned p) {
  if (p < 2) throw InvalidArgument("p must be a prime");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidArgument(std::to_string(p) + " is not prime");
  const GroupRef cp = make_group("C" + std::to_string(p));
  const GroupRef k = direct_product(cp, cp);
  Example3Result r;
  r.p = p;
  r.spec = example3_spec(p);
  const FunctorRef a = parse_functor(r.spec);
  const std::size_t q = p;
  r.formula_g = q * q + 1;
  r.formula_gg = q * q * q * q + q * q * q + q * q + 1;
  r.deficit_formula = static_cast<long>(q * q * (q - 1));
  r.dim_g_rank = a->dim(cp);
  r.dim_gg_rank = a->dim(k);
  r.dim_g_count = count_surjecting_classes(cp, k);
  r.dim_gg_count = count_surjecting_classes(k, k);
  r.strict = strict_condition6(*a, cp, cp);
  return r;
}

}  // namespace gb
