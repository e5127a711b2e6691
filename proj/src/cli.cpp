#include "greenbiset/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "greenbiset/checks.hpp"
#include "greenbiset/config.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/example3.hpp"
#include "greenbiset/green.hpp"
#include "greenbiset/linalg.hpp"
#include "greenbiset/properties.hpp"
#include "greenbiset/report.hpp"

namespace gb {

namespace {

using json = nlohmann::ordered_json;

struct Overrides {
  std::string config_file;
  std::optional<std::size_t> bound, intermediate_bound, instances, max_order;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_dir, format;
  bool no_cache = false;
};

Config resolve(const Overrides& o) {
  Config c;
  c.cache_dir = default_cache_dir();
  if (!o.config_file.empty()) c = load_config(o.config_file, c);
  // the environment overrides the file, flags override both
  if (const char* d = std::getenv("GREENBISET_CACHE_DIR"); d && *d) c.cache_dir = d;
  if (o.bound) c.bound = *o.bound;
  if (o.intermediate_bound) c.intermediate_bound = *o.intermediate_bound;
  if (o.instances) c.instances = *o.instances;
  if (o.max_order) c.max_order = *o.max_order;
  if (o.seed) c.seed = *o.seed;
  if (o.cache_dir) {
    if (o.cache_dir->empty()) c.cache_dir.reset();
    else c.cache_dir = *o.cache_dir;
  }
  if (o.no_cache) c.cache_dir.reset();
  if (o.format) c.format = parse_format(*o.format);
  if (c.bound < 1) throw InvalidArgument("bound must be at least 1");
  return c;
}

int status_of(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (r.verdict != Verdict::Pass) return kExitFail;
  return kExitPass;
}

Vec parse_coefficients(const std::string& text, const Field& f, std::size_t n) {
  Vec v;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) v.push_back(parse_scalar(tok, f));
  if (v.size() != n) throw InvalidArgument("expected " + std::to_string(n) + " coefficients, got " + std::to_string(v.size()));
  return v;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
  const auto c = s.find(':');
  if (c == std::string::npos || c == 0 || c + 1 == s.size()) throw InvalidArgument("pair '" + s + "' must look like G:H");
  return {s.substr(0, c), s.substr(c + 1)};
}

// --- commands -------------------------------------------------------------

int cmd_dims(const Config& c, const std::string& spec, const std::vector<std::string>& groups, std::ostream& out) {
  const FunctorRef a = parse_functor(spec);
  json arr = json::array();
  std::ostringstream text;
  for (const auto& gs : groups) {
    const GroupRef g = make_group(gs);
    const auto basis = a->basis(g);
    arr.push_back({{"spec", a->spec()}, {"group", g->label()}, {"dim", basis.size()}, {"basis", basis}});
    text << a->spec() << " at " << g->label() << ": " << basis.size() << '\n';
    text << "  basis:";
    for (const auto& b : basis) text << ' ' << b;
    text << '\n';
  }
  if (c.format == OutputFormat::Json) out << render_json(arr.size() == 1 ? arr[0] : arr);
  else out << text.str();
  return kExitPass;
}

int cmd_gram(const Config& c, const std::string& spec, const std::string& hs, const std::string& ls,
             const std::string& route, std::ostream& out) {
  const FunctorRef a = parse_functor(spec);
  const GroupRef h = make_group(hs), l = make_group(ls.empty() ? "C1" : ls);
  GramRoute r = GramRoute::Dot;
  if (route == "compose") r = GramRoute::Compose;
  else if (route != "dot") throw InvalidArgument("route must be dot or compose");
  const Matrix m = gram_matrix(*a, h, l, r);
  const std::size_t rk = rank(m);
  if (c.format == OutputFormat::Json) {
    out << render_json({{"spec", a->spec()}, {"H", h->label()}, {"L", l->label()}, {"route", route},
                        {"gram", to_json(m)}, {"rank", rk}, {"size", m.rows()}});
  } else {
    out << "gram of <-,->_{" << h->label() << "," << l->label() << "} for " << a->spec() << '\n';
    out << render_matrix(m);
    out << "rank " << rk << " of " << m.rows() << '\n';
  }
  return kExitPass;
}

int emit(const Config& c, const std::vector<CheckReport>& rs, std::ostream& out) {
  out << render_reports(rs, c.format);
  return status_of(rs);
}

int cmd_props(const Config& c, const std::string& spec, const std::string& only, std::ostream& out) {
  const FunctorRef a = parse_functor(spec);
  PropertyConfig pc{c.seed, c.instances, c.max_order};
  std::vector<PropertyOutcome> rs;
  if (only.empty()) rs = run_property_suites(a, pc);
  else rs.push_back(run_property(a, only, pc));
  bool ok = true;
  for (const auto& r : rs) ok = ok && r.passed();
  if (c.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(r.to_json());
    out << render_json({{"spec", a->spec()}, {"seed", c.seed}, {"instances", c.instances},
                        {"max_order", c.max_order}, {"results", arr}, {"passed", ok}});
  } else {
    out << "properties of " << a->spec() << " (seed " << c.seed << ", " << c.instances
        << " instances each, groups of order <= " << c.max_order << ")\n";
    std::size_t w = 0;
    for (const auto& r : rs) w = std::max(w, r.identity.size());
    for (const auto& r : rs) {
      out << "  " << r.identity << std::string(w - r.identity.size(), ' ') << "  " << (r.passed() ? "PASS" : "FAIL")
          << "  " << (r.instances - r.failures) << "/" << r.instances << "  groups";
      for (const auto& g : r.groups) out << ' ' << g;
      out << '\n';
      if (!r.first_failure.is_null()) out << "    first failure: " << r.first_failure.dump() << '\n';
    }
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_example3(const Config& c, unsigned p, std::ostream& out) {
  const Example3Result r = run_example3(p);
  if (c.format == OutputFormat::Json) {
    out << render_json(r.to_json());
  } else {
    const std::string cp = "C" + std::to_string(p);
    const auto& w = r.strict.witnesses;
    out << r.spec << ", p = " << p << '\n';
    out << "  dim A(" << cp << ") = " << r.dim_g_rank << "  (rank route " << r.dim_g_rank << ", surjecting classes "
        << r.dim_g_count << ", p^2+1 = " << r.formula_g << ")\n";
    out << "  dim A(" << cp << "x" << cp << ") = " << r.dim_gg_rank << "  (rank route " << r.dim_gg_rank
        << ", surjecting classes " << r.dim_gg_count << ", p^4+p^3+p^2+1 = " << r.formula_gg << ")\n";
    out << "  routes agree: " << (r.routes_agree() ? "yes" : "no") << '\n';
    out << "  strictness at (" << cp << ", " << cp << "): " << (r.strict.verdict == Verdict::Fail ? "FAIL" : "PASS")
        << "  rank " << w.value("rank", 0) << ", dim^2 " << r.dim_g_rank * r.dim_g_rank << ", difference "
        << w.value("deficit", 0L) << " = p^2(p-1) = " << r.deficit_formula << '\n';
    out << "  reproduced: " << (r.reproduced() ? "yes" : "no") << '\n';
  }
  return r.reproduced() ? kExitPass : kExitFail;
}

int cmd_act(const Config& c, const std::string& spec, const std::string& word, const std::string& coeffs,
            const std::string& source, std::ostream& out) {
  const FunctorRef a = parse_functor(spec);
  const BisetWord w = parse_word(word, source.empty() ? nullptr : make_group(source));
  const Vec x = parse_coefficients(coeffs, a->field(), a->dim(w.source()));
  const Vec y = a->act(w, x);
  const auto labels = a->basis(w.target());
  if (c.format == OutputFormat::Json) {
    out << render_json({{"spec", a->spec()}, {"word", w.to_string()}, {"source", w.source()->label()},
                        {"target", w.target()->label()}, {"input", to_json(x)}, {"output", to_json(y)},
                        {"basis", labels}});
  } else {
    out << w.to_string() << " : " << w.source()->label() << " -> " << w.target()->label() << '\n';
    bool any = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i].is_zero()) continue;
      out << "  " << labels[i] << "  " << y[i].to_string() << '\n';
      any = true;
    }
    if (!any) out << "  0\n";
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Green biset functors over small groups, with exact arithmetic."};
  app.name(args.empty() ? "greenbiset" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  app.add_option("--config", o.config_file, "key = value configuration file");
  app.add_option("--bound", o.bound, "enumeration bound on group orders (default 256)");
  app.add_option("--intermediate-bound", o.intermediate_bound, "bound on element-wise product groups (default 4096)");
  app.add_option("--cache-dir", o.cache_dir, "cache directory; empty disables the disk cache");
  app.add_flag("--no-cache", o.no_cache, "keep everything in memory");
  app.add_option("--format", o.format, "text or json");
  app.add_option("--seed", o.seed, "seed for property sampling");
  app.add_option("--instances", o.instances, "random instances per identity");
  app.add_option("--max-order", o.max_order, "largest sampled group order in props");

  std::string spec, g1, g2, g3, route = "dot", word, coeffs, source, only;
  std::vector<std::string> groups, catalog, pairs;
  unsigned p = 0;
  std::function<int(const Config&)> action;

  auto* dims = app.add_subcommand("dims", "dimension and basis of A(G)");
  dims->add_option("spec", spec, "functor spec")->required();
  dims->add_option("groups", groups, "groups")->required();
  dims->callback([&] { action = [&](const Config& c) { return cmd_dims(c, spec, groups, out); }; });

  auto* gram = app.add_subcommand("gram", "Gram matrix of <-,->_{H,L}");
  gram->add_option("spec", spec)->required();
  gram->add_option("H", g1)->required();
  gram->add_option("L", g2, "defaults to C1");
  gram->add_option("--route", route, "dot or compose");
  gram->callback([&] { action = [&](const Config& c) { return cmd_gram(c, spec, g1, g2, route, out); }; });

  auto* check = app.add_subcommand("check", "certificates");
  check->require_subcommand(1);
  auto* gf = check->add_subcommand("green-field", "field-ness of A(1) and non-degeneracy over a catalog");
  gf->add_option("spec", spec)->required();
  gf->add_option("--catalog", catalog, "groups, comma separated")->delimiter(',');
  gf->callback([&] {
    action = [&](const Config& c) {
      return emit(c, {green_field_certificate(*parse_functor(spec), catalog.empty() ? c.catalog_or_default() : catalog)}, out);
    };
  });
  auto* st = check->add_subcommand("strict", "bijectivity of A(G) (x) A(H) -> A(G x H)");
  st->add_option("spec", spec)->required();
  st->add_option("--pairs", pairs, "G:H pairs, comma separated; default all pairs of the catalog")->delimiter(',');
  st->callback([&] {
    action = [&](const Config& c) {
      const FunctorRef a = parse_functor(spec);
      std::vector<std::pair<std::string, std::string>> ps;
      if (pairs.empty()) {
        const auto cat = c.catalog_or_default();
        for (std::size_t i = 0; i < cat.size(); ++i)
          for (std::size_t j = i; j < cat.size(); ++j) ps.emplace_back(cat[i], cat[j]);
      } else {
        for (const auto& s : pairs) ps.push_back(split_pair(s));
      }
      std::vector<CheckReport> rs;
      for (const auto& [x, y] : ps) rs.push_back(strict_condition6(*a, make_group(x), make_group(y)));
      return emit(c, rs, out);
    };
  });
  auto* ss = check->add_subcommand("semisimple", "trace-form radical of A(L x L)");
  ss->add_option("spec", spec)->required();
  ss->add_option("L", g1)->required();
  ss->callback([&] { action = [&](const Config& c) { return emit(c, {endo_semisimplicity(*parse_functor(spec), make_group(g1))}, out); }; });
  auto* an = check->add_subcommand("anisotropic", "positive definiteness of <-,->_{L,L}");
  an->add_option("spec", spec)->required();
  an->add_option("L", g1)->required();
  an->callback([&] { action = [&](const Config& c) { return emit(c, {anisotropy_check(*parse_functor(spec), make_group(g1))}, out); }; });
  auto* fo = check->add_subcommand("field-at-one", "whether A(1) is a field");
  fo->add_option("spec", spec)->required();
  fo->callback([&] { action = [&](const Config& c) { return emit(c, {is_field_at_one(*parse_functor(spec))}, out); }; });
  auto* tn = check->add_subcommand("tensor", "injectivity of A(G) (x) M(H) -> M(G x H) for M = shift(A, L)");
  tn->add_option("spec", spec)->required();
  tn->add_option("G", g1)->required();
  tn->add_option("L", g2)->required();
  tn->add_option("H", g3)->required();
  tn->callback([&] {
    action = [&](const Config& c) {
      return emit(c, {tensor_injectivity(*parse_functor(spec), make_group(g1), make_group(g2), make_group(g3))}, out);
    };
  });
  auto* es = check->add_subcommand("essential", "dimension of the essential algebra at H");
  es->add_option("spec", spec)->required();
  es->add_option("H", g1)->required();
  es->callback([&] {
    action = [&](const Config& c) {
      const EssentialDim e = essential_dim(*parse_functor(spec), make_group(g1));
      if (c.format == OutputFormat::Json)
        out << render_json({{"spec", parse_functor(spec)->spec()}, {"H", make_group(g1)->label()}, {"dim_HxH", e.dim_hh},
                            {"ideal_dim", e.ideal_dim}, {"essential", e.essential}, {"smaller", e.smaller}});
      else
        out << "essential algebra at " << make_group(g1)->label() << ": " << e.essential << " (dim A(HxH) " << e.dim_hh
            << ", through smaller groups " << e.ideal_dim << ")\n";
      return static_cast<int>(kExitPass);
    };
  });

  auto* props = app.add_subcommand("props", "seeded property suites");
  props->add_option("spec", spec)->required();
  props->add_option("--identity", only, "run one identity only");
  props->callback([&] { action = [&](const Config& c) { return cmd_props(c, spec, only, out); }; });

  auto* ex3 = app.add_subcommand("example3", "dimensions and strictness failure of e_K^K QB_K, K = Cp x Cp");
  ex3->add_option("p", p)->required()->check(CLI::Range(2u, 97u));
  ex3->callback([&] { action = [&](const Config& c) { return cmd_example3(c, p, out); }; });

  auto* act = app.add_subcommand("act", "apply a biset word to an element");
  act->add_option("spec", spec)->required();
  act->add_option("word", word, "e.g. 'Res[C2<S3];Ind[C2<C2xC2]'")->required();
  act->add_option("coefficients", coeffs, "comma separated, over the basis at the source")->required();
  act->add_option("--source", source, "source group, needed when the word starts with a swap");
  act->callback([&] { action = [&](const Config& c) { return cmd_act(c, spec, word, coeffs, source, out); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("greenbiset");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  try {
    const Config c = resolve(o);
    apply_config(c);
    return action(c);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace gb
