#include "greenbiset/linrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "greenbiset/cache.hpp"
#include "greenbiset/error.hpp"

namespace gb {

namespace {

using u64 = std::uint64_t;

// Arithmetic in F_p, p < 2^31.
struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

using Mat = std::vector<std::vector<u64>>;

// Rows of the reduced echelon form of a row basis; returns pivots.
std::vector<std::size_t> rref(const Fp& f, Mat& m) {
  std::vector<std::size_t> piv;
  if (m.empty()) return piv;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t s = r;
    while (s < m.size() && m[s][c] == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[s], m[r]);
    const u64 iv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 t = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(t, m[r][k]));
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

// Null space of a square matrix acting on column vectors.
Mat kernel(const Fp& f, Mat a) {
  const std::size_t n = a.size();
  const auto piv = rref(f, a);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.sub(0, a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via Hessenberg form, constant term first.
std::vector<u64> charpoly(const Fp& f, Mat h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 t = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      const u64 u = f.mul(h[i][m - 1], t);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<std::vector<u64>> pk(n + 1);
  pk[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h_mm) p_{m-1}
    const auto& prev = pk[m - 1];
    std::vector<u64> cur(m + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], prev[k]);
      cur[k] = f.sub(cur[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 c = f.mul(t, h[m - i - 1][m - 1]);
      const auto& q = pk[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = f.sub(cur[k], f.mul(c, q[k]));
    }
    pk[m] = std::move(cur);
  }
  return pk[n];
}

u64 choose_prime(u64 exponent, u64 order) {
  u64 p = exponent + 1;
  while (p <= 2 * order || !is_prime(p)) p += exponent;
  return p;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> primes;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : primes)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool is_trivial_row(const std::vector<Cyclotomic>& r) {
  return std::all_of(r.begin(), r.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

// Stores every value in Q(z_e), e the exponent, so lexicographic order is
// taken in one power basis.
void embed_rows(std::vector<std::vector<Cyclotomic>>& rows, unsigned e) {
  for (auto& r : rows)
    for (auto& v : r) v = v.embed(e);
}

// Degree, then the trivial character, then lexicographic.
void sort_table(CharacterTable& t) {
  embed_rows(t.irr, static_cast<unsigned>(t.group->exponent()));
  std::vector<std::size_t> idx(t.irr.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    const bool ta = is_trivial_row(t.irr[a]), tb = is_trivial_row(t.irr[b]);
    if (ta != tb) return ta;
    return row_less(t.irr[a], t.irr[b]);
  });
  CharacterTable s{t.group, {}, {}};
  for (auto i : idx) {
    s.irr.push_back(std::move(t.irr[i]));
    s.degrees.push_back(t.degrees[i]);
  }
  t = std::move(s);
}

long isqrt(u64 t) {
  auto d = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(t))));
  while (d * d > t) --d;
  while ((d + 1) * (d + 1) <= t) ++d;
  return d * d == t ? static_cast<long>(d) : -1;
}

}  // namespace

CharacterTable dixon_schneider(const GroupRef& gp) {
  const Group& g = *gp;
  const auto& cc = g.conjugacy_classes();
  const std::size_t r = cc.size();
  const u64 e = g.exponent();
  const Fp f{choose_prime(e, g.order())};
  const u64 omega = f.pow(primitive_root(f), (f.p - 1) / e);

  std::vector<Elt> reps(r);
  for (std::size_t k = 0; k < r; ++k) reps[k] = cc.classes[k][0];

  // T_j[i][k] = #{x in C_j : x^-1 g_k in C_i}; central characters are common
  // right eigenvectors.
  auto class_matrix = [&](std::size_t j) {
    Mat t(r, std::vector<u64>(r, 0));
    for (Elt x : cc.classes[j]) {
      const Elt xi = g.inv(x);
      for (std::size_t k = 0; k < r; ++k) ++t[cc.class_of[g.mul(xi, reps[k])]][k];
    }
    return t;
  };

  std::vector<Mat> spaces;  // each a row basis in reduced echelon form
  {
    Mat all(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) all[i][i] = 1;
    spaces.push_back(std::move(all));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    const Mat t = class_matrix(j);
    std::vector<Mat> next;
    for (auto& w : spaces) {
      const std::size_t d = w.size();
      if (d == 1) {
        next.push_back(std::move(w));
        continue;
      }
      Mat tmp = w;
      const auto piv = rref(f, tmp);
      // Restriction: coordinates of T b at the pivot columns.
      Mat a(d, std::vector<u64>(d, 0));  // column c = image of basis vector c
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<u64> img(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (t[i][k]) s = f.add(s, f.mul(t[i][k] % f.p, w[c][k]));
          img[i] = s;
        }
        for (std::size_t row = 0; row < d; ++row) a[row][c] = img[piv[row]];
      }
      const auto cp = charpoly(f, a);
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < f.p && found < d; ++lambda) {
        u64 v = 0;
        for (std::size_t k = cp.size(); k-- > 0;) v = f.add(f.mul(v, lambda), cp[k]);
        if (v != 0) continue;
        Mat shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        Mat ker = kernel(f, shifted);
        Mat sub;
        for (const auto& coords : ker) {
          std::vector<u64> vec(r, 0);
          for (std::size_t c = 0; c < d; ++c)
            if (coords[c])
              for (std::size_t k = 0; k < r; ++k) vec[k] = f.add(vec[k], f.mul(coords[c], w[c][k]));
          sub.push_back(std::move(vec));
        }
        rref(f, sub);
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw Error("character table of " + g.label() + ": class matrix not diagonalizable mod " + std::to_string(f.p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error("character table of " + g.label() + ": eigenspaces did not split");

  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k) inv_class[k] = cc.class_of[g.inv(reps[k])];

  CharacterTable out{gp, {}, {}};
  for (auto& w : spaces) {
    std::vector<u64> v = w[0];
    const u64 n0 = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, n0);
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = f.add(s, f.mul(f.mul(v[k], v[inv_class[k]]), f.inv(cc.classes[k].size() % f.p)));
    const u64 t = f.mul(g.order() % f.p, f.inv(s));
    const long deg = isqrt(t);
    if (deg <= 0) throw Error("character table of " + g.label() + ": degree recovery failed");
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = f.mul(f.mul(static_cast<u64>(deg), v[k]), f.inv(cc.classes[k].size() % f.p));
    std::vector<Cyclotomic> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = g.element_order(reps[k]);
      const u64 wo = f.pow(omega, e / o);
      std::vector<u64> vals(o);
      for (u64 l = 0; l < o; ++l) vals[l] = chi[cc.class_of[g.power(reps[k], static_cast<long>(l))]];
      const u64 oinv = f.inv(o % f.p);
      Cyclotomic val;
      for (u64 jj = 0; jj < o; ++jj) {
        u64 m = 0;
        const u64 step = f.inv(f.pow(wo, jj));  // w_o^-j
        u64 z = 1;
        for (u64 l = 0; l < o; ++l, z = f.mul(z, step)) m = f.add(m, f.mul(vals[l], z));
        m = f.mul(m, oinv);
        if (m > static_cast<u64>(deg)) throw Error("character table of " + g.label() + ": eigenvalue multiplicity out of range");
        if (m) val += Cyclotomic::root_of_unity(static_cast<unsigned>(e), static_cast<long>(jj * (e / o))) * Cyclotomic(static_cast<long>(m));
      }
      row[k] = std::move(val);
    }
    out.irr.push_back(std::move(row));
    out.degrees.push_back(deg);
  }
  sort_table(out);
  return out;
}

CharacterTable cyclic_character_table(const GroupRef& gp) {
  const Group& g = *gp;
  const std::size_t n = g.order();
  Elt gen = 0;
  bool found = n == 1;
  for (Elt x = 0; x < n && !found; ++x)
    if (g.element_order(x) == n) {
      gen = x;
      found = true;
    }
  if (!found) throw InvalidArgument(g.label() + " is not cyclic");
  const auto& cc = g.conjugacy_classes();
  std::vector<std::size_t> log(n);
  Elt y = 0;
  for (std::size_t l = 0; l < n; ++l, y = g.mul(y, gen)) log[y] = l;
  CharacterTable out{gp, {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Cyclotomic> row(n);
    for (std::size_t k = 0; k < n; ++k)
      row[k] = Cyclotomic::root_of_unity(static_cast<unsigned>(n), static_cast<long>((j * log[cc.classes[k][0]]) % n));
    out.irr.push_back(std::move(row));
    out.degrees.push_back(1);
  }
  sort_table(out);
  return out;
}

namespace {

bool is_cyclic(const Group& g) {
  for (Elt x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

CharacterTable kronecker(const GroupRef& gp) {
  CharacterTable acc{nullptr, {{Cyclotomic(1)}}, {1}};
  for (const auto& fac : gp->factors()) {
    const auto& t = character_table(fac);
    CharacterTable next{nullptr, {}, {}};
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        std::vector<Cyclotomic> row;
        row.reserve(acc.irr[a].size() * t.irr[b].size());
        for (const auto& x : acc.irr[a])
          for (const auto& y : t.irr[b]) row.push_back(x * y);
        next.irr.push_back(std::move(row));
        next.degrees.push_back(acc.degrees[a] * t.degrees[b]);
      }
    acc = std::move(next);
  }
  acc.group = gp;
  sort_table(acc);
  return acc;
}

CharacterTable table_from_json(const GroupRef& g, const nlohmann::json& j) {
  CharacterTable t{g, {}, {}};
  for (const auto& row : j.at("irr")) {
    std::vector<Cyclotomic> vals;
    for (const auto& s : row) vals.push_back(parse_cyclotomic(s.get<std::string>()));
    t.irr.push_back(std::move(vals));
  }
  t.degrees = j.at("degrees").get<std::vector<long>>();
  embed_rows(t.irr, static_cast<unsigned>(g->exponent()));
  const std::size_t r = g->conjugacy_classes().size();
  if (t.irr.size() != r || t.degrees.size() != r) throw Error("bad cached table");
  for (std::size_t i = 0; i < r; ++i)
    if (t.irr[i].size() != r || t.irr[i][0] != Cyclotomic(t.degrees[i])) throw Error("bad cached table");
  return t;
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json irr = nlohmann::json::array();
  for (const auto& row : t.irr) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    irr.push_back(std::move(r));
  }
  return {{"irr", irr}, {"degrees", t.degrees}};
}

CharacterTable build_table(const GroupRef& g) {
  if (g->is_product()) return kronecker(g);
  if (is_cyclic(*g)) return cyclic_character_table(g);
  try {
    auto j = cache::get_or_build("chartable", g->label(), [&] { return table_to_json(dixon_schneider(g)); });
    return table_from_json(g, j);
  } catch (const nlohmann::json::exception&) {
  } catch (const Error&) {
  }
  return dixon_schneider(g);
}

}  // namespace

const CharacterTable& character_table(const GroupRef& g) {
  static std::recursive_mutex mu;
  static std::map<const Group*, std::unique_ptr<CharacterTable>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(g.get()); it != memo.end()) return *it->second;
  auto t = std::make_unique<CharacterTable>(build_table(g));
  auto [it, inserted] = memo.emplace(g.get(), std::move(t));
  return *it->second;
}

namespace linrep {

namespace {

// f o h, for h: A -> B and f on B; result on A.
ClassFunction pullback(const GroupHom& h, const ClassFunction& f) {
  const auto& ca = h.source()->conjugacy_classes();
  const auto& cb = h.target()->conjugacy_classes();
  ClassFunction out{h.source(), {}};
  out.values.reserve(ca.size());
  for (const auto& cls : ca.classes) out.values.push_back(f.values[cb.class_of[h(cls[0])]]);
  return out;
}

ClassFunction induce(const GroupHom& incl, const ClassFunction& f) {
  const Group& g = *incl.target();
  const Group& h = *incl.source();
  const auto& cg = g.conjugacy_classes();
  const auto& ch = h.conjugacy_classes();
  std::vector<Cyclotomic> acc(cg.size());
  for (std::size_t d = 0; d < ch.size(); ++d) {
    if (f.values[d].is_zero()) continue;
    acc[cg.class_of[incl(ch.classes[d][0])]] += f.values[d] * Cyclotomic(static_cast<long>(ch.classes[d].size()));
  }
  for (std::size_t c = 0; c < cg.size(); ++c)
    if (!acc[c].is_zero()) {
      Rational q(static_cast<long>(g.order()), static_cast<long>(cg.classes[c].size() * h.order()));
      q.canonicalize();
      acc[c] *= Cyclotomic(q);
    }
  return {incl.target(), std::move(acc)};
}

ClassFunction deflate(const GroupHom& proj, const ClassFunction& f) {
  const Group& g = *proj.source();
  const auto& cg = g.conjugacy_classes();
  const auto& cq = proj.target()->conjugacy_classes();
  std::vector<long> rep_index(proj.target()->order(), -1);
  for (std::size_t c = 0; c < cq.size(); ++c) rep_index[cq.classes[c][0]] = static_cast<long>(c);
  std::vector<Cyclotomic> acc(cq.size());
  for (Elt x = 0; x < g.order(); ++x) {
    const long c = rep_index[proj(x)];
    if (c >= 0) acc[c] += f.values[cg.class_of[x]];
  }
  const Rational n(static_cast<long>(g.order() / proj.target()->order()));
  for (auto& v : acc) v /= Cyclotomic(n);
  return {proj.target(), std::move(acc)};
}

}  // namespace

ClassFunction apply(const Elemental& e, const ClassFunction& f) {
  if (f.group != e.source()) throw DomainError("biset factor " + e.to_string() + " applied at " + f.group->label());
  const GroupHom& h = e.hom();
  switch (e.kind()) {
    case ElementalKind::Res:
    case ElementalKind::Inf: return pullback(h, f);
    case ElementalKind::Ind: return induce(h, f);
    case ElementalKind::Def: return deflate(h, f);
    case ElementalKind::Iso: return pullback(inverse(h), f);
  }
  return f;
}

ClassFunction apply(const BisetWord& w, const ClassFunction& f) {
  if (f.group != w.source()) throw DomainError("biset word from " + w.source()->label() + " applied at " + f.group->label());
  ClassFunction cur = f;
  for (const auto& e : w.factors()) cur = apply(e, cur);
  return cur;
}

ClassFunction times(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction out{direct_product(f.group, g.group), {}};
  out.values.reserve(f.values.size() * g.values.size());
  for (const auto& a : f.values)
    for (const auto& b : g.values) out.values.push_back(a.is_zero() || b.is_zero() ? Cyclotomic() : a * b);
  return out;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group != g.group) throw DomainError("class functions on different groups");
  const auto& cc = f.group->conjugacy_classes();
  Cyclotomic s;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    if (f.values[k].is_zero() || g.values[k].is_zero()) continue;
    s += f.values[k] * g.values[k].conj() * Cyclotomic(static_cast<long>(cc.classes[k].size()));
  }
  return s / Cyclotomic(static_cast<long>(f.group->order()));
}

}  // namespace linrep

const std::vector<std::vector<std::size_t>>& galois_orbits(const GroupRef& g) {
  static std::mutex mu;
  static std::map<const Group*, std::vector<std::vector<std::size_t>>> memo;
  const auto& t = character_table(g);
  std::lock_guard lock(mu);
  if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
  const long e = static_cast<long>(g->exponent());
  std::map<std::vector<Cyclotomic>, std::size_t, decltype(&row_less)> index(&row_less);
  for (std::size_t i = 0; i < t.size(); ++i) index.emplace(t.irr[i], i);
  std::vector<long> orbit_of(t.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<std::size_t> orb;
    for (long a = 1; a <= e; ++a) {
      if (std::gcd(a, e) != 1) continue;
      std::vector<Cyclotomic> row;
      for (const auto& v : t.irr[i]) row.push_back(v.galois(a).embed(static_cast<unsigned>(e)));
      const std::size_t j = index.at(row);
      if (orbit_of[j] < 0) {
        orbit_of[j] = static_cast<long>(orbits.size());
        orb.push_back(j);
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return memo.emplace(g.get(), std::move(orbits)).first->second;
}

std::vector<ClassFunction> rational_character_basis(const GroupRef& g) {
  const auto& t = character_table(g);
  std::vector<ClassFunction> out;
  for (const auto& orb : galois_orbits(g)) {
    ClassFunction cf{g, std::vector<Cyclotomic>(t.irr[0].size())};
    for (auto i : orb)
      for (std::size_t k = 0; k < cf.values.size(); ++k) cf.values[k] += t.irr[i][k];
    out.push_back(std::move(cf));
  }
  return out;
}

namespace {

Cyclotomic coeff_value(const Scalar& s) {
  if (s.field().characteristic() != 0) throw FieldError("representation rings are implemented over characteristic 0 only");
  return s.to_cyclotomic();
}

Scalar to_field(const Cyclotomic& c, const Field& f) {
  switch (f.kind) {
    case Field::Kind::Rational:
      if (!c.is_rational()) throw FieldError("coefficient " + c.to_string() + " is not rational");
      return Scalar(c.rational_value());
    case Field::Kind::Cyclotomic: return Scalar(c);
    case Field::Kind::PrimeField: break;
  }
  throw FieldError("representation rings are implemented over characteristic 0 only");
}

ClassFunction combine(const GroupRef& g, const std::vector<std::vector<Cyclotomic>>& rows, const Vec& coeffs) {
  if (coeffs.size() != rows.size()) throw InvalidArgument("coefficient vector does not match the character basis of " + g->label());
  ClassFunction cf{g, std::vector<Cyclotomic>(g->conjugacy_classes().size())};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const Cyclotomic c = coeff_value(coeffs[i]);
    for (std::size_t k = 0; k < cf.values.size(); ++k) cf.values[k] += c * rows[i][k];
  }
  return cf;
}

}  // namespace

ClassFunction from_irreducible_coeffs(const GroupRef& g, const Vec& coeffs) {
  return combine(g, character_table(g).irr, coeffs);
}

Vec to_irreducible_coeffs(const ClassFunction& cf, const Field& f) {
  const auto& t = character_table(cf.group);
  Vec out;
  out.reserve(t.size());
  for (const auto& row : t.irr) out.push_back(to_field(linrep::inner_product(cf, ClassFunction{cf.group, row}), f));
  return out;
}

ClassFunction from_rational_coeffs(const GroupRef& g, const Vec& coeffs) {
  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& cf : rational_character_basis(g)) rows.push_back(std::move(cf.values));
  return combine(g, rows, coeffs);
}

Vec to_rational_coeffs(const ClassFunction& cf, const Field& f) {
  const auto& t = character_table(cf.group);
  Vec out;
  for (const auto& orb : galois_orbits(cf.group)) {
    const Cyclotomic c = linrep::inner_product(cf, ClassFunction{cf.group, t.irr[orb[0]]});
    for (std::size_t i = 1; i < orb.size(); ++i)
      if (linrep::inner_product(cf, ClassFunction{cf.group, t.irr[orb[i]]}) != c)
        throw DomainError("class function is not in the span of the rational character basis of " + cf.group->label());
    out.push_back(to_field(c, f));
  }
  return out;
}

}  // namespace gb
