#include "greenbiset/functor.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "greenbiset/burnside.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/linalg.hpp"
#include "greenbiset/linrep.hpp"
#include "greenbiset/subgroups.hpp"

namespace gb {

Vec Functor::times(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y) const {
  return times_then_act(g, x, h, y, BisetWord::identity(direct_product(g, h)));
}

Vec Functor::basis_vector(const GroupRef& g, std::size_t i) const {
  Vec v = zero(g);
  if (i >= v.size()) throw InvalidArgument("basis index " + std::to_string(i) + " out of range at " + g->label());
  v[i] = Scalar::one(field());
  return v;
}

Vec Functor::zero(const GroupRef& g) const { return zero_vec(field(), dim(g)); }

bool satisfies_constant_constraint(std::uint64_t q, std::size_t order) {
  std::size_t n = order;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    if (p % q != 1 % q) return false;
    while (n % p == 0) n /= p;
  }
  return n == 1 || n % q == 1 % q;
}

namespace {

void check_size(const Vec& x, std::size_t n, const GroupRef& g) {
  if (x.size() != n)
    throw InvalidArgument("element has " + std::to_string(x.size()) + " coefficients, A(" + g->label() + ") has dimension " +
                          std::to_string(n));
}

void require_char0(const Field& f, const std::string& what) {
  if (f.characteristic() != 0) throw FieldError(what + " needs a coefficient field of characteristic 0");
}

class BurnsideFunctor final : public Functor {
 public:
  explicit BurnsideFunctor(Field f) : f_(f) {}
  FunctorKind kind() const override { return FunctorKind::Burnside; }
  std::string spec() const override { return "burnside(" + f_.name() + ")"; }
  Field field() const override { return f_; }

  std::vector<std::string> basis(const GroupRef& g) const override {
    std::vector<std::string> out;
    for (const auto& l : subgroup_lattice(g).labels()) out.push_back("[" + l + "]");
    return out;
  }

  Vec act(const BisetWord& w, const Vec& x) const override {
    return burnside::apply(w, GSetSum::from_coeffs(w.source(), x)).reduce(f_);
  }

  Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y, const BisetWord& w) const override {
    auto p = burnside::times(GSetSum::from_coeffs(g, x), GSetSum::from_coeffs(h, y));
    return burnside::apply(w, p).reduce(f_);
  }

  Vec unit() const override { return {Scalar::one(f_)}; }

 private:
  Field f_;
};

class RepFunctor final : public Functor {
 public:
  RepFunctor(Field f, bool rational_span) : f_(f), span_(rational_span) {
    require_char0(f, rational_span ? "repQ" : "repC");
  }
  FunctorKind kind() const override { return span_ ? FunctorKind::LinRepQSpan : FunctorKind::LinRepC; }
  std::string spec() const override { return std::string(span_ ? "repQ(" : "repC(") + f_.name() + ")"; }
  Field field() const override { return f_; }

  std::vector<std::string> basis(const GroupRef& g) const override {
    const std::size_t n = span_ ? galois_orbits(g).size() : character_table(g).size();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back((span_ ? "psi" : "chi") + std::to_string(i));
    return out;
  }

  Vec act(const BisetWord& w, const Vec& x) const override { return down(linrep::apply(w, up(w.source(), x))); }

  Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y, const BisetWord& w) const override {
    return down(linrep::apply(w, linrep::times(up(g, x), up(h, y))));
  }

  Vec unit() const override { return {Scalar::one(f_)}; }

 private:
  ClassFunction up(const GroupRef& g, const Vec& x) const {
    return span_ ? from_rational_coeffs(g, x) : from_irreducible_coeffs(g, x);
  }
  Vec down(const ClassFunction& cf) const { return span_ ? to_rational_coeffs(cf, f_) : to_irreducible_coeffs(cf, f_); }

  Field f_;
  bool span_;
};

class ConstantFunctor final : public Functor {
 public:
  explicit ConstantFunctor(std::uint64_t q) : f_(Field::prime(q)) {}
  FunctorKind kind() const override { return FunctorKind::ConstantField; }
  std::string spec() const override { return "const(" + std::to_string(f_.modulus) + ")"; }
  Field field() const override { return f_; }

  std::vector<std::string> basis(const GroupRef& g) const override {
    check(g);
    return {"1"};
  }

  Vec act(const BisetWord& w, const Vec& x) const override {
    check(w.source());
    check(w.target());
    check_size(x, 1, w.source());
    return {x[0] * multiplier(w)};
  }

  Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y, const BisetWord& w) const override {
    check(g);
    check(h);
    check(w.target());
    check_size(x, 1, g);
    check_size(y, 1, h);
    return {x[0] * y[0] * multiplier(w)};
  }

  Vec unit() const override { return {Scalar::one(f_)}; }

 private:
  void check(const GroupRef& g) const {
    if (!satisfies_constant_constraint(f_.modulus, g->order()))
      throw DomainError("const(" + std::to_string(f_.modulus) + ") is only defined on groups whose prime divisors are 1 mod " +
                        std::to_string(f_.modulus) + "; " + g->label() + " is not");
  }
  Scalar multiplier(const BisetWord& w) const {
    return Scalar(ModP(f_.modulus, static_cast<std::int64_t>(orbit_count_through(w) % f_.modulus)));
  }
  Field f_;
};

class ShiftFunctor final : public Functor {
 public:
  ShiftFunctor(FunctorRef inner, GroupRef l) : inner_(std::move(inner)), l_(std::move(l)) {}
  FunctorKind kind() const override { return FunctorKind::Shift; }
  std::string spec() const override { return "shift(" + inner_->spec() + ", " + l_->label() + ")"; }
  Field field() const override { return inner_->field(); }

  std::vector<std::string> basis(const GroupRef& g) const override { return inner_->basis(direct_product(g, l_)); }
  std::size_t shift_order() const override { return l_->order() * inner_->shift_order(); }

  Vec act(const BisetWord& w, const Vec& x) const override { return inner_->act(extend(w, l_), x); }

  // x at G x L, y at H x L; the product lives at G x L x H x L and is
  // restricted along (g, h, l) -> (g, l, h, l).
  Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y, const BisetWord& w) const override {
    const GroupHom r = tuple_map({g, h, l_}, {g, l_, h, l_}, {0, 2, 1, 2});
    const BisetWord word = BisetWord::single(Elemental::res(r)).then(extend(w, l_));
    return inner_->times_then_act(direct_product(g, l_), x, direct_product(h, l_), y, word);
  }

  Vec unit() const override {
    if (l_->is_trivial()) return inner_->unit();
    return inner_->act(BisetWord::single(Elemental::inf(tuple_map({l_}, {}, {}))), inner_->unit());
  }

  const FunctorRef& inner() const { return inner_; }
  const GroupRef& group() const { return l_; }

 private:
  FunctorRef inner_;
  GroupRef l_;
};

class CutFunctor final : public Functor {
 public:
  CutFunctor(FunctorRef inner, Vec e, std::string name) : inner_(std::move(inner)), e_(std::move(e)), name_(std::move(name)) {
    const GroupRef one = trivial_group();
    check_size(e_, inner_->dim(one), one);
    if (inner_->times(one, e_, one, e_) != e_) throw DomainError(name_ + " is not an idempotent of A(1) for " + inner_->spec());
  }
  FunctorKind kind() const override { return FunctorKind::Cut; }
  std::string spec() const override { return "cut(" + inner_->spec() + ", " + name_ + ")"; }
  Field field() const override { return inner_->field(); }

  std::vector<std::string> basis(const GroupRef& g) const override { return data(g).labels; }
  std::size_t shift_order() const override { return inner_->shift_order(); }

  Vec act(const BisetWord& w, const Vec& x) const override {
    return project(w.target(), inner_->act(w, lift(w.source(), x)));
  }

  Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y, const BisetWord& w) const override {
    return project(w.target(), inner_->times_then_act(g, lift(g, x), h, lift(h, y), w));
  }

  Vec unit() const override { return project(trivial_group(), e_); }

 private:
  struct Data {
    std::vector<Vec> columns;  // basis of the image, in inner coordinates
    std::vector<std::size_t> rows;
    Matrix solver;  // inverse of the columns restricted to `rows`
    std::vector<std::string> labels;
  };

  const Data& data(const GroupRef& g) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(g.get()); it != memo_.end()) return *it->second;
    }
    auto d = std::make_unique<Data>(build(g));
    std::lock_guard lock(mu_);
    return *memo_.emplace(g.get(), std::move(d)).first->second;
  }

  Data build(const GroupRef& g) const {
    const GroupRef one = trivial_group();
    const auto labels = inner_->basis(g);
    const std::size_t n = labels.size();
    const Field f = field();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(inner_->times(one, e_, g, inner_->basis_vector(g, j)));
    const Echelon ech = row_reduce(Matrix::from_columns(cols, n, f));
    Data d;
    for (auto j : ech.pivot_columns) {
      d.columns.push_back(cols[j]);
      d.labels.push_back("e*" + labels[j]);
    }
    const std::size_t k = d.columns.size();
    if (k == 0) return d;
    const Matrix b = Matrix::from_columns(d.columns, n, f);
    d.rows = row_reduce(b.transpose()).pivot_columns;
    Matrix sub(k, k, f);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = b(d.rows[r], c);
    d.solver = inverse(sub);
    return d;
  }

  Vec lift(const GroupRef& g, const Vec& x) const {
    const Data& d = data(g);
    check_size(x, d.columns.size(), g);
    Vec v = inner_->zero(g);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t r = 0; r < v.size(); ++r)
        if (!d.columns[i][r].is_zero()) v[r] += x[i] * d.columns[i][r];
    }
    return v;
  }

  Vec project(const GroupRef& g, const Vec& v) const {
    const Data& d = data(g);
    const std::size_t k = d.columns.size();
    Vec sel;
    for (auto r : d.rows) sel.push_back(v[r]);
    Vec c = k ? d.solver.apply(sel) : Vec{};
    Vec back = inner_->zero(g);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < back.size(); ++r)
        if (!c[i].is_zero() && !d.columns[i][r].is_zero()) back[r] += c[i] * d.columns[i][r];
    if (back != v) throw DomainError("result leaves the image of " + name_ + " at " + g->label());
    return c;
  }

  FunctorRef inner_;
  Vec e_;
  std::string name_;
  mutable std::mutex mu_;
  mutable std::map<const Group*, std::unique_ptr<Data>> memo_;
};

// ---- parsing ----

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// "name(a, b)" -> name, top-level arguments.
std::pair<std::string, std::vector<std::string>> split_call(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw InvalidArgument("malformed functor spec '" + text + "'");
  std::vector<std::string> args;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i + 1 < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth < 0) throw InvalidArgument("unbalanced parentheses in '" + text + "'");
    if (text[i] == ',' && depth == 0) {
      args.push_back(trim(std::string_view(text).substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidArgument("unbalanced parentheses in '" + text + "'");
  args.push_back(trim(std::string_view(text).substr(start, text.size() - 1 - start)));
  return {trim(std::string_view(text).substr(0, open)), args};
}

std::uint64_t parse_prime(const std::string& s) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidArgument("expected a prime, got '" + s + "'");
  const auto q = std::stoull(s);
  if (!is_prime(q)) throw InvalidArgument(s + " is not prime");
  return q;
}

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s == "Cyc") return Field::cyclotomics();
  if (s.size() > 1 && s[0] == 'F') return Field::prime(parse_prime(s.substr(1)));
  throw InvalidArgument("unknown field '" + s + "' (expected Q, Cyc or F<q>)");
}

void expect_args(const std::string& name, const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n) throw InvalidArgument(name + " takes " + std::to_string(n) + " argument(s)");
}

Vec named_idempotent(const FunctorRef& inner, const std::string& name) {
  const GroupRef one = trivial_group();
  if (auto* s = dynamic_cast<const ShiftFunctor*>(inner.get()); s && s->inner()->kind() == FunctorKind::Burnside) {
    const auto ids = primitive_idempotents(s->group(), inner->field());
    if (name == "eTop") return ids.back();
    if (name.size() > 1 && name[0] == 'e' && std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const auto i = std::stoul(name.substr(1));
      if (i >= ids.size()) throw InvalidArgument("idempotent index " + name + " out of range (" + std::to_string(ids.size()) + " classes)");
      return ids[i];
    }
    throw InvalidArgument("unknown idempotent '" + name + "'");
  }
  if (name == "e0" && inner->dim(one) == 1) return inner->unit();
  throw InvalidArgument("idempotent '" + name + "' is only defined for cut(shift(burnside(F), K), ...) or e0 on one-dimensional A(1)");
}

FunctorRef parse(const std::string& text) {
  auto [name, args] = split_call(text);
  if (name == "burnside") {
    expect_args(name, args, 1);
    return burnside_functor(parse_field(args[0]));
  }
  if (name == "repC" || name == "repQ") {
    expect_args(name, args, 1);
    const Field f = parse_field(args[0]);
    return name == "repC" ? repC_functor(f) : repQ_functor(f);
  }
  if (name == "const") {
    expect_args(name, args, 1);
    return constant_functor(parse_prime(args[0]));
  }
  if (name == "shift") {
    expect_args(name, args, 2);
    return shift_functor(parse(args[0]), make_group(args[1]));
  }
  if (name == "cut") {
    expect_args(name, args, 2);
    auto inner = parse(args[0]);
    return cut_functor(inner, named_idempotent(inner, args[1]), args[1]);
  }
  throw InvalidArgument("unknown functor '" + name + "'");
}

}  // namespace

FunctorRef burnside_functor(const Field& f) { return std::make_shared<BurnsideFunctor>(f); }
FunctorRef repC_functor(const Field& f) { return std::make_shared<RepFunctor>(f, false); }
FunctorRef repQ_functor(const Field& f) { return std::make_shared<RepFunctor>(f, true); }
FunctorRef constant_functor(std::uint64_t q) { return std::make_shared<ConstantFunctor>(q); }
FunctorRef shift_functor(FunctorRef inner, GroupRef l) { return std::make_shared<ShiftFunctor>(std::move(inner), std::move(l)); }
FunctorRef cut_functor(FunctorRef inner, Vec e, std::string e_name) {
  return std::make_shared<CutFunctor>(std::move(inner), std::move(e), std::move(e_name));
}

FunctorRef parse_functor(std::string_view text) { return parse(trim(text)); }

}  // namespace gb
