// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "greenbiset/checks.hpp"
#include "greenbiset/example3.hpp"
#include "greenbiset/green.hpp"
#include "greenbiset/linalg.hpp"
#include "greenbiset/linrep.hpp"
#include "greenbiset/properties.hpp"
#include "greenbiset/subgroups.hpp"

using namespace gb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed expectations of one criterion.
struct Criterion {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

// --- oracles ----------------------------------------------------------------

// Conjugacy classes by orbit enumeration with the multiplication table.
std::size_t class_count_brute(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t n = 0;
  for (Elt x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++n;
    for (Elt y = 0; y < g.order(); ++y) seen[g.mul(g.inv(y), g.mul(x, y))] = true;
  }
  return n;
}

// |A \ G / B| by enumerating the sets A g B.
std::size_t double_cosets_brute(const Group& g, const ElementSet& a, const ElementSet& b) {
  std::vector<bool> seen(g.order(), false);
  std::size_t n = 0;
  for (Elt x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++n;
    for (Elt s : a)
      for (Elt t : b) seen[g.mul(s, g.mul(x, t))] = true;
  }
  return n;
}

// (1/|G|) sum over elements of f1(x) f2(x)
Cyclotomic elementwise_pairing(const ClassFunction& f1, const ClassFunction& f2) {
  const Group& g = *f1.group;
  const auto& cls = g.conjugacy_classes();
  Cyclotomic s;
  for (Elt x = 0; x < g.order(); ++x) s += f1.values[cls.class_of[x]] * f2.values[cls.class_of[x]];
  return s * Cyclotomic(Rational(1, static_cast<long>(g.order())));
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

// --- criteria ---------------------------------------------------------------

std::string criterion1(Criterion& c) {
  std::ostringstream note;
  for (unsigned p : {2u, 3u}) {
    const auto t0 = Clock::now();
    const Example3Result r = run_example3(p);
    const double secs = seconds_since(t0);
    const std::size_t q = p;
    const std::size_t want_g = q * q + 1, want_gg = q * q * q * q + q * q * q + q * q + 1;
    const std::string tag = "p=" + std::to_string(p) + ": ";
    c.expect(r.dim_g_rank == want_g, tag + "rank route at Cp gave " + std::to_string(r.dim_g_rank));
    c.expect(r.dim_g_count == want_g, tag + "class count at Cp gave " + std::to_string(r.dim_g_count));
    c.expect(r.dim_gg_rank == want_gg, tag + "rank route at CpxCp gave " + std::to_string(r.dim_gg_rank));
    c.expect(r.dim_gg_count == want_gg, tag + "class count at CpxCp gave " + std::to_string(r.dim_gg_count));
    c.expect(secs < 120.0, tag + "took " + std::to_string(secs) + " s");
    note << tag << r.dim_g_rank << "/" << r.dim_gg_rank << " (both routes) ";
  }
  return note.str();
}

std::string criterion2(Criterion& c) {
  std::ostringstream note;
  for (unsigned p : {2u, 3u}) {
    const auto a = parse_functor(example3_spec(p));
    const auto cp = make_group("C" + std::to_string(p));
    const CheckReport r = strict_condition6(*a, cp, cp);
    const long want = static_cast<long>(p * p * (p - 1));
    c.expect(r.verdict == Verdict::Fail, "p=" + std::to_string(p) + ": strictness did not fail");
    const long got = r.witnesses.value("deficit", -1L);
    c.expect(got == want, "p=" + std::to_string(p) + ": deficit " + std::to_string(got));
    note << "p=" << p << " deficit " << got << " ";
  }
  return note.str();
}

std::string criterion3(Criterion& c) {
  const auto a = parse_functor("repC(Q)");
  const auto t0 = Clock::now();
  const CheckReport gf = green_field_certificate(*a, catalog_up_to(12));
  c.expect(gf.verdict == Verdict::Pass, "green field certificate: " + to_string(gf.verdict));
  c.expect(gf.scope.size() == catalog_up_to(12).size(), "green field scope incomplete");
  const auto cat = catalog_up_to(8);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i; j < cat.size(); ++j) {
      const auto g = make_group(cat[i]), h = make_group(cat[j]);
      const CheckReport r = strict_condition6(*a, g, h);
      const std::size_t kg = class_count_brute(*g), kh = class_count_brute(*h);
      const std::size_t kgh = class_count_brute(*direct_product(g, h));
      const std::string tag = cat[i] + "," + cat[j];
      c.expect(r.verdict == Verdict::Pass, tag + ": " + to_string(r.verdict));
      c.expect(r.witnesses.value("rank", 0UL) == kg * kh, tag + ": rank differs from k(G)k(H)");
      c.expect(kgh == kg * kh, tag + ": k(GxH) differs from k(G)k(H)");
      c.expect(r.witnesses.value("dim_GxH", 0UL) == kgh, tag + ": dim A(GxH) differs from k(GxH)");
      ++pairs;
    }
  const double secs = seconds_since(t0);
  c.expect(secs < 300.0, "took " + std::to_string(secs) + " s");
  return std::to_string(catalog_up_to(12).size()) + " groups, " + std::to_string(pairs) + " pairs";
}

std::string criterion4(Criterion& c) {
  const auto a = parse_functor("repQ(Q)");
  std::vector<std::string> done;
  for (const char* ls : {"C2", "C3", "C4", "C2xC2", "S3", "C5"}) {
    const auto l = make_group(ls);
    const CheckReport r = anisotropy_check(*a, l);
    c.expect(r.verdict == Verdict::Pass, std::string(ls) + ": not positive definite");
    c.expect(r.witnesses.value("character_formula_agrees", false), std::string(ls) + ": character formula disagrees");
    // independent: element-wise pairing of the rational basis characters of L x L
    const auto ll = direct_product(l, l);
    const auto psi = rational_character_basis(ll);
    const Matrix g = gram_matrix(*a, l, l);
    bool same = g.rows() == psi.size();
    for (std::size_t i = 0; same && i < psi.size(); ++i)
      for (std::size_t j = 0; same && j < psi.size(); ++j) {
        const Cyclotomic v = elementwise_pairing(psi[i], psi[j]);
        same = v.is_rational() && Scalar(v.rational_value()) == g(i, j);
      }
    c.expect(same, std::string(ls) + ": Gram differs from the element-wise character sums");
    done.push_back(ls);
  }
  return "L in {" + join(done) + "}";
}

std::string criterion5(Criterion& c) {
  const auto b = parse_functor("burnside(Q)");
  const auto v = make_group("C2xC2");
  const auto one = trivial_group();
  const Matrix g = gram_matrix(*b, v, one);
  const auto& lat = subgroup_lattice(v);
  bool same = g.rows() == 5 && g.cols() == 5 && lat.size() == 5;
  Matrix oracle(5, 5, Field::rationals());
  for (std::size_t i = 0; same && i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      oracle(i, j) = Scalar(static_cast<long>(double_cosets_brute(*v, lat[i].representative, lat[j].representative)));
      same = same && oracle(i, j) == g(i, j);
    }
  c.expect(same, "Gram differs from the double coset counts");
  const std::size_t rk = rank(g);
  c.expect(rk == 4, "rank " + std::to_string(rk));
  const CheckReport r = green_field_certificate(*b, catalog_up_to(4));
  c.expect(r.verdict == Verdict::Fail, "certificate did not fail");
  c.expect(r.witnesses.value("group", std::string()) == "C2xC2", "failure not located at C2xC2");
  c.expect(r.witnesses.value("rank", 0UL) == 4, "reported rank is not 4");
  c.expect(r.witnesses["left_inverse_of_radical"] == nlohmann::ordered_json{"none"}, "left inverse reported");
  // the reported radical vector is in the kernel of the oracle matrix, and
  // has no left inverse
  Vec x;
  for (const auto& e : r.witnesses["radical_vector"]) x.push_back(parse_scalar(e.get<std::string>(), Field::rationals()));
  c.expect(x.size() == 5 && x != b->zero(v), "missing radical vector");
  if (x.size() == 5) {
    c.expect(oracle.apply(x) == b->zero(v), "radical vector not in the kernel");
    c.expect(!left_inverse(*b, v, x).has_value(), "left_inverse found one");
  }
  return "rank " + std::to_string(rk) + " of 5, left inverse: none";
}

std::string criterion6(Criterion& c) {
  const std::vector<std::string> specs = {"burnside(Q)",
                                          "repC(Q)",
                                          "repQ(Q)",
                                          "const(2)",
                                          "shift(burnside(Q), C2)",
                                          "shift(repC(Q), C2)",
                                          example3_spec(2)};
  const std::vector<std::string> required = {"associativity", "identity", "opposite",    "bilinear-maps",
                                             "adjoint",       "module-assoc", "module-assoc-shift", "trivial-group"};
  PropertyConfig cfg;  // seed 1, 200 instances, order <= 6
  std::size_t runs = 0;
  for (const auto& s : specs) {
    const auto a = parse_functor(s);
    const auto out = run_property_suites(a, cfg);
    std::set<std::string> seen;
    for (const auto& r : out) {
      seen.insert(r.identity);
      c.expect(r.failures == 0, s + " " + r.identity + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure.dump());
      c.expect(r.instances >= 200, s + " " + r.identity + ": only " + std::to_string(r.instances) + " instances");
      for (const auto& g : r.groups) c.expect(make_group(g)->order() <= 6, s + " " + r.identity + ": sampled " + g);
      runs += r.instances;
    }
    for (const auto& id : required) c.expect(seen.count(id) == 1, s + ": identity " + id + " missing");
  }
  return std::to_string(specs.size()) + " functors, " + std::to_string(runs) + " instances";
}

std::string criterion7(Criterion& c) {
  const auto a = parse_functor("const(2)");
  const std::vector<std::string> odd = {"C3", "C5", "C7", "C9", "C3xC3"};
  const auto one = trivial_group();
  for (const auto& s : odd) {
    const auto g = make_group(s);
    c.expect(a->dim(g) == 1, s + ": dimension " + std::to_string(a->dim(g)));
    const Matrix gm = gram_matrix(*a, g, one);
    c.expect(gm.rows() == 1 && gm(0, 0) == Scalar::one(a->field()), s + ": Gram is not [1]");
    // composite through G: A(1 x G) x A(G x 1) -> A(1); multiplier |G| mod 2
    const Vec m = compose(*a, one, g, one, a->basis_vector(g, 0), a->basis_vector(g, 0));
    c.expect(m == Vec{Scalar::from_int(a->field(), static_cast<long>(g->order() % 2))}, s + ": composite multiplier");
  }
  const CheckReport gf = green_field_certificate(*a, odd);
  c.expect(gf.verdict == Verdict::Pass, "green field certificate: " + to_string(gf.verdict));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i; j < odd.size(); ++j) {
      // C9 x C9 and friends stay well under the bound
      const CheckReport r = strict_condition6(*a, make_group(odd[i]), make_group(odd[j]));
      c.expect(r.verdict == Verdict::Pass, odd[i] + "," + odd[j] + ": " + to_string(r.verdict));
    }
  return "{" + join(odd) + "}";
}

std::string criterion8(Criterion& c) {
  const auto a = parse_functor("repC(Q)");
  std::vector<std::string> dims;
  for (const char* ls : {"C1", "C2", "C3"}) {
    const CheckReport r = endo_semisimplicity(*a, make_group(ls));
    c.expect(r.verdict == Verdict::Pass, std::string(ls) + ": radical is nonzero");
    dims.push_back(std::string(ls) + " dim " + std::to_string(r.witnesses.value("dimension", 0UL)));
  }
  return join(dims);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string(Criterion&)>>> criteria = {
      {"example functor dimensions p=2,3 by both routes", criterion1},
      {"strictness deficit p^2(p-1)", criterion2},
      {"repC green field and strictness", criterion3},
      {"repQ span anisotropy", criterion4},
      {"Burnside non-field witness", criterion5},
      {"property suites", criterion6},
      {"constant functor on odd groups", criterion7},
      {"repC endomorphism algebras semisimple", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    std::string note;
    const auto t0 = Clock::now();
    try {
      note = criteria[i].second(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.problems.empty();
    failed += !ok;
    std::ostringstream secs;
    secs.precision(1);
    secs << std::fixed << seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << note
              << "] (" << secs.str() << " s)\n";
    for (const auto& p : c.problems) std::cout << "    " << p << '\n';
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
