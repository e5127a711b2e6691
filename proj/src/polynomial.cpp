#include "greenbiset/polynomial.hpp"

#include <algorithm>
#include <set>

#include "greenbiset/error.hpp"
#include "greenbiset/linalg.hpp"

namespace gb {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> c = c_;
  const Rational lead = c.back();
  for (auto& a : c) a /= lead;
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> r = c_;
  if (degree() < d.degree()) return {QPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  const Rational lead = d.leading();
  for (int i = degree(); i >= d.degree(); --i) {
    const Rational f = r[i] / lead;
    q[i - d.degree()] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= f * d.c_[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly annihilating_polynomial(const Matrix& m, const Vec& v) {
  if (!m.is_square() || v.size() != m.rows()) throw InvalidArgument("dimension mismatch in Krylov sequence");
  std::vector<Vec> krylov{v};
  for (std::size_t k = 1; k <= m.rows() + 1; ++k) {
    Vec next = m.apply(krylov.back());
    // is `next` in the span of the sequence so far?
    const Matrix basis = Matrix::from_columns(krylov, m.rows(), m.field());
    if (auto sol = solve_linear(basis, next)) {
      std::vector<Rational> c(k + 1, Rational(0));
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*sol)[i].to_rational();
      c[k] = 1;
      return QPoly(std::move(c));
    }
    krylov.push_back(std::move(next));
  }
  throw Error("Krylov sequence failed to terminate");
}

namespace {

std::vector<Integer> integer_coefficients(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    Integer d = c.get_den();
    Integer g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = g;
  }
  std::vector<Integer> out;
  for (const auto& c : p.coeffs()) {
    Rational s = c * l;
    out.push_back(s.get_num());
  }
  return out;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > Integer(1000000000)) throw Error("rational root search: coefficient too large to factor");
  const unsigned long v = n.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.emplace_back(d);
      if (d * d != v) out.emplace_back(v / d);
    }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  std::set<Rational> roots;
  if (p.degree() <= 0) return {};
  // strip factors of x
  std::size_t shift = 0;
  while (sgn(p[shift]) == 0) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  std::vector<Rational> rest(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
  const QPoly q(rest);
  if (q.degree() >= 1) {
    const auto ints = integer_coefficients(q);
    for (const auto& num : divisors(ints.front()))
      for (const auto& den : divisors(ints.back()))
        for (int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (sgn(q.eval(cand)) == 0) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

namespace {

using PolyP = std::vector<std::uint64_t>;  // over F_q, constant first

void trim_p(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

PolyP mod_p(const PolyP& a, const PolyP& m, std::uint64_t q) {
  PolyP r = a;
  trim_p(r);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = powmod(m.back(), q - 2, q);
  while (r.size() > dm && !r.empty()) {
    const std::uint64_t f = mulmod(r.back(), inv, q);
    const std::size_t off = r.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) r[off + j] = (r[off + j] + q - mulmod(f, m[j], q)) % q;
    trim_p(r);
  }
  return r;
}

PolyP mulmod_poly(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], q)) % q;
  return mod_p(c, m, q);
}

PolyP gcd_p(PolyP a, PolyP b, std::uint64_t q) {
  trim_p(a);
  trim_p(b);
  while (!b.empty()) {
    PolyP r = mod_p(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP derivative_p(const PolyP& a, std::uint64_t q) {
  PolyP d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % q, q));
  trim_p(d);
  return d;
}

}  // namespace

bool irreducible_mod_prime(const QPoly& p, std::uint64_t q) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  const auto ints = integer_coefficients(p);
  PolyP f;
  for (const auto& c : ints) {
    Integer r = c % Integer(static_cast<unsigned long>(q));
    if (r < 0) r += static_cast<unsigned long>(q);
    f.push_back(r.get_ui());
  }
  if (f.back() == 0) return false;  // degree drops mod q
  trim_p(f);
  // squarefree mod q
  if (gcd_p(f, derivative_p(f, q), q).size() != 1) return false;
  const std::size_t d = f.size() - 1;
  PolyP x{0, 1};
  PolyP power = x;  // x^(q^i) mod f
  for (std::size_t i = 1; i <= d / 2; ++i) {
    // raise to the q-th power
    PolyP base = power, acc{1};
    std::uint64_t e = q;
    while (e) {
      if (e & 1) acc = mulmod_poly(acc, base, f, q);
      base = mulmod_poly(base, base, f, q);
      e >>= 1;
    }
    power = acc;
    PolyP diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + q - 1) % q;
    trim_p(diff);
    if (gcd_p(f, diff, q).size() != 1) return false;
  }
  return true;
}

}  // namespace gb
