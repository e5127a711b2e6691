#include <doctest.h>

#include "greenbiset/error.hpp"
#include "greenbiset/properties.hpp"

using namespace gb;

namespace {

// Burnside with a doubled unit: breaks the unit and identity axioms only.
class DoubledUnit final : public Functor {
 public:
  DoubledUnit() : b_(burnside_functor(Field::rationals())) {}
  FunctorKind kind() const override { return FunctorKind::Burnside; }
  std::string spec() const override { return "doubled"; }
  Field field() const override { return b_->field(); }
  std::vector<std::string> basis(const GroupRef& g) const override { return b_->basis(g); }
  Vec act(const BisetWord& w, const Vec& x) const override { return b_->act(w, x); }
  Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y, const BisetWord& w) const override {
    return b_->times_then_act(g, x, h, y, w);
  }
  Vec unit() const override { return {Scalar(2)}; }

 private:
  FunctorRef b_;
};

PropertyConfig small(std::size_t n) {
  PropertyConfig c;
  c.instances = n;
  return c;
}

}  // namespace

TEST_CASE("identities hold on small samples") {
  for (const char* spec : {"burnside(Q)", "repC(Q)", "repQ(Q)", "const(2)", "shift(burnside(Q), C2)"}) {
    CAPTURE(std::string(spec));
    const auto a = parse_functor(spec);
    const auto out = run_property_suites(a, small(15));
    CHECK(out.size() == property_names(*a).size());
    for (const auto& r : out) {
      CAPTURE(r.identity);
      CHECK(r.passed());
      CHECK(r.instances == 15);
      CHECK(r.first_failure.is_null());
    }
  }
}

TEST_CASE("constant functor samples only odd groups") {
  const auto r = run_property(parse_functor("const(2)"), "associativity", small(40));
  for (const auto& g : r.groups) CHECK(make_group(g)->order() % 2 == 1);
}

TEST_CASE("cut stability is only offered for cuts") {
  const auto names = property_names(*parse_functor("burnside(Q)"));
  CHECK(std::find(names.begin(), names.end(), "cut-stability") == names.end());
  const auto cut = parse_functor("cut(shift(burnside(Q), C2), eTop)");
  const auto cn = property_names(*cut);
  CHECK(cn.back() == "cut-stability");
  CHECK(run_property(cut, "cut-stability", small(30)).passed());
  CHECK_THROWS_AS(run_property(cut, "no-such-identity", small(1)), InvalidArgument);
}

TEST_CASE("seeded runs are reproducible") {
  const auto a = parse_functor("repC(Q)");
  const auto x = run_property(a, "opposite", small(20)).to_json().dump();
  CHECK(x == run_property(a, "opposite", small(20)).to_json().dump());
  PropertyConfig other = small(20);
  other.seed = 99;
  CHECK(run_property(a, "opposite", other).passed());
}

TEST_CASE("a broken unit is detected") {
  const FunctorRef bad = std::make_shared<DoubledUnit>();
  const auto u = run_property(bad, "unit", small(20));
  CHECK(u.failures == 20);
  CHECK(u.first_failure["instance"] == 0);
  CHECK(run_property(bad, "identity", small(20)).failures > 0);
  CHECK(run_property(bad, "associativity", small(20)).passed());
}
