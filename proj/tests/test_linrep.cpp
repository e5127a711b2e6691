#include <doctest.h>

#include <algorithm>

#include "greenbiset/error.hpp"
#include "greenbiset/linrep.hpp"
#include "greenbiset/subgroups.hpp"

using namespace gb;

namespace {

const char* kGroups[] = {"C1", "C2", "C3", "C4", "C2xC2", "C5", "S3", "D8", "Q8", "A4", "D10", "S4", "C2xS3", "D12"};

bool same_rows(const CharacterTable& a, const CharacterTable& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.degrees[i] != b.degrees[i] || a.irr[i] != b.irr[i]) return false;
  return true;
}

ClassFunction constant(const GroupRef& g, long v) {
  return {g, std::vector<Cyclotomic>(g->conjugacy_classes().size(), Cyclotomic(v))};
}

ClassFunction regular(const GroupRef& g) {
  ClassFunction f{g, std::vector<Cyclotomic>(g->conjugacy_classes().size())};
  f.values[0] = Cyclotomic(static_cast<long>(g->order()));
  return f;
}

// Induction straight from the definition, over elements.
ClassFunction induce_oracle(const GroupHom& incl, const ClassFunction& f) {
  const Group& g = *incl.target();
  const Group& h = *incl.source();
  std::vector<long> pre(g.order(), -1);
  for (Elt y = 0; y < h.order(); ++y) pre[incl(y)] = static_cast<long>(y);
  const auto& cg = g.conjugacy_classes();
  const auto& ch = h.conjugacy_classes();
  ClassFunction out{incl.target(), {}};
  for (const auto& cls : cg.classes) {
    Cyclotomic s;
    for (Elt x = 0; x < g.order(); ++x) {
      const long y = pre[g.conj(cls[0], x)];
      if (y >= 0) s += f.values[ch.class_of[y]];
    }
    out.values.push_back(s / Cyclotomic(static_cast<long>(h.order())));
  }
  return out;
}

}  // namespace

TEST_CASE("orthogonality relations and degree sums") {
  for (const char* name : kGroups) {
    const std::string label = name;
    CAPTURE(label);
    auto g = make_group(name);
    const auto& t = character_table(g);
    const auto& cc = g->conjugacy_classes();
    REQUIRE(t.size() == cc.size());
    long sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t.irr[i][0] == Cyclotomic(t.degrees[i]));
      sum += t.degrees[i] * t.degrees[i];
      for (std::size_t j = 0; j < t.size(); ++j)
        CHECK(linrep::inner_product({g, t.irr[i]}, {g, t.irr[j]}) == Cyclotomic(i == j ? 1L : 0L));
    }
    CHECK(sum == static_cast<long>(g->order()));
    // column orthogonality: sum_chi |chi(g)|^2 = |C_G(g)|
    for (std::size_t k = 0; k < cc.size(); ++k) {
      Cyclotomic s;
      for (const auto& row : t.irr) s += row[k] * row[k].conj();
      CHECK(s == Cyclotomic(static_cast<long>(g->order() / cc.classes[k].size())));
    }
    CHECK(t.irr[0] == constant(g, 1).values);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t.degrees[i - 1] <= t.degrees[i]);
  }
}

TEST_CASE("known degree patterns") {
  CHECK(character_table(make_group("S4")).degrees == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(character_table(make_group("A4")).degrees == std::vector<long>{1, 1, 1, 3});
  CHECK(character_table(make_group("Q8")).degrees == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(character_table(make_group("D10")).degrees == std::vector<long>{1, 1, 2, 2});
}

TEST_CASE("closed form for cyclic groups matches Dixon-Schneider") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto g = make_group("C" + std::to_string(n));
    CHECK(same_rows(cyclic_character_table(g), dixon_schneider(g)));
  }
  CHECK(same_rows(cyclic_character_table(make_group("C2xC3")), dixon_schneider(make_group("C2xC3"))));
  CHECK_THROWS_AS(cyclic_character_table(make_group("C2xC2")), InvalidArgument);
}

TEST_CASE("Kronecker tables of products match Dixon-Schneider") {
  for (const char* name : {"C2xC2", "C2xS3", "S3xS3", "C3xQ8", "C2xC2xC2"}) {
    const std::string label = name;
    CAPTURE(label);
    auto g = make_group(name);
    CHECK(same_rows(character_table(g), dixon_schneider(g)));
  }
}

TEST_CASE("induction agrees with the defining sum; Frobenius reciprocity") {
  for (auto [hn, gn] : {std::pair{"C2", "S3"}, {"C3", "S3"}, {"C4", "D8"}, {"C2xC2", "D8"}, {"C3", "A4"}, {"S3", "S4"}, {"D8", "S4"}, {"C4", "Q8"}}) {
    const std::string label = gn;
    CAPTURE(label);
    auto h = make_group(hn), g = make_group(gn);
    auto incl = *find_embedding(h, g);
    const auto& th = character_table(h);
    const auto& tg = character_table(g);
    for (const auto& row : th.irr) {
      ClassFunction f{h, row};
      auto ind = linrep::apply(Elemental::ind(incl), f);
      CHECK(ind.values == induce_oracle(incl, f).values);
      for (const auto& chi : tg.irr) {
        auto res = linrep::apply(Elemental::res(incl), ClassFunction{g, chi});
        CHECK(linrep::inner_product(ind, {g, chi}) == linrep::inner_product(f, res));
      }
      // a character: nonnegative integer multiplicities
      for (const auto& c : to_irreducible_coeffs(ind, Field::rationals())) {
        auto q = c.to_rational();
        CHECK(q >= 0);
        CHECK(is_integer(q));
      }
    }
  }
}

TEST_CASE("permutation characters count fixed points") {
  auto g = make_group("S4");
  const auto& lat = subgroup_lattice(g);
  const auto& cc = g->conjugacy_classes();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    auto sub = subgroup_group(g, lat[i].representative);
    auto perm = linrep::apply(Elemental::ind(sub.inclusion), constant(sub.group, 1));
    auto gs = transitive_gset(g, lat[i].representative);
    auto table = gs.left_action_table();
    for (std::size_t k = 0; k < cc.size(); ++k) {
      long fixed = 0;
      for (std::size_t u = 0; u < gs.size; ++u) fixed += table[cc.classes[k][0] * gs.size + u] == u;
      CHECK(perm.values[k] == Cyclotomic(fixed));
    }
  }
}

TEST_CASE("deflation and inflation") {
  for (auto [gn, nn] : {std::pair{"D8", "C2"}, {"S4", "C2xC2"}, {"Q8", "C2"}, {"A4", "C2xC2"}, {"S3", "C3"}}) {
    const std::string label = gn;
    CAPTURE(label);
    auto g = make_group(gn);
    auto proj = find_embedding(make_group(nn), g, true);
    REQUIRE(proj);
    auto quo = quotient_group(g, [&] {
      ElementSet s(proj->images().begin(), proj->images().end());
      std::sort(s.begin(), s.end());
      return s;
    }());
    for (const auto& row : character_table(quo.group).irr) {
      ClassFunction f{quo.group, row};
      auto inf = linrep::apply(Elemental::inf(quo.projection), f);
      CHECK(linrep::apply(Elemental::def(quo.projection), inf).values == f.values);
    }
    CHECK(linrep::apply(Elemental::def(quo.projection), regular(g)).values == regular(quo.group).values);
  }
}

TEST_CASE("words act factor by factor and respect identity isomorphisms") {
  auto g = make_group("S3");
  auto w = parse_word("Res[C3<S3];Ind[C3<S3]");
  ClassFunction f{g, character_table(g).irr[2]};
  auto once = linrep::apply(w, f);
  auto direct = linrep::apply(w.factors()[1], linrep::apply(w.factors()[0], f));
  CHECK(once.values == direct.values);
  CHECK(linrep::apply(Elemental::iso(identity_hom(g)), f).values == f.values);
  CHECK_THROWS_AS(linrep::apply(w, ClassFunction{make_group("C3"), {1, 1, 1}}), DomainError);
}

TEST_CASE("products of class functions") {
  auto a = make_group("C2"), b = make_group("S3");
  const auto& ta = character_table(a);
  const auto& tb = character_table(b);
  auto ab = direct_product(a, b);
  std::size_t found = 0;
  for (const auto& x : ta.irr)
    for (const auto& y : tb.irr) {
      auto p = linrep::times({a, x}, {b, y});
      auto c = to_irreducible_coeffs(p, Field::rationals());
      long ones = 0;
      for (const auto& s : c) ones += s.to_rational() == 1;
      CHECK(ones == 1);
      CHECK(linrep::inner_product(p, p) == Cyclotomic(1));
      ++found;
    }
  CHECK(found == character_table(ab).size());
}

TEST_CASE("rational character basis") {
  CHECK(rational_character_basis(make_group("C3")).size() == 2);
  CHECK(rational_character_basis(make_group("C5")).size() == 2);
  CHECK(rational_character_basis(make_group("C4")).size() == 3);
  CHECK(rational_character_basis(make_group("C6")).size() == 4);
  CHECK(rational_character_basis(make_group("Q8")).size() == 5);
  CHECK(rational_character_basis(make_group("S4")).size() == 5);
  auto c3 = make_group("C3");
  auto basis = rational_character_basis(c3);
  CHECK(basis[1].values == std::vector<Cyclotomic>{2, -1, -1});
  for (const auto& b : basis)
    for (const auto& v : b.values) CHECK(v.is_rational());
  // round trip
  Vec x{Scalar(Rational(3)), Scalar(Rational(-2))};
  CHECK(to_rational_coeffs(from_rational_coeffs(c3, x), Field::rationals()) == x);
  ClassFunction lone{c3, character_table(c3).irr[1]};
  CHECK_THROWS_AS(to_rational_coeffs(lone, Field::rationals()), DomainError);
  ClassFunction twisted = lone;
  for (auto& v : twisted.values) v *= Cyclotomic::root_of_unity(3, 1);
  CHECK_THROWS_AS(to_irreducible_coeffs(twisted, Field::rationals()), FieldError);
  auto c = to_irreducible_coeffs(twisted, Field::cyclotomics());
  CHECK(c[1] == Scalar(Cyclotomic::root_of_unity(3, 1)));
  CHECK_THROWS_AS(from_irreducible_coeffs(c3, {Scalar(ModP(5, 1)), Scalar(ModP(5, 0)), Scalar(ModP(5, 0))}), FieldError);
}
