#include "greenbiset/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "greenbiset/error.hpp"

namespace gb {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct ReductionTable {
  unsigned phi = 1;
  // row j: coefficients of x^j mod Phi_n in the power basis, j in [0, n)
  std::vector<std::vector<long>> rows;
};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::vector<long>>& polynomial_cache() {
  static std::map<unsigned, std::vector<long>> cache;
  return cache;
}

std::vector<long> compute_cyclotomic_polynomial(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& den = cyclotomic_polynomial(d);
    const long dd = static_cast<long>(den.size()) - 1;  // monic of degree dd
    const long deg = static_cast<long>(num.size()) - 1;
    std::vector<long> quot(static_cast<std::size_t>(deg - dd + 1), 0);
    for (long i = deg; i >= dd; --i) {
      const long c = num[i];
      quot[i - dd] = c;
      if (c != 0)
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

std::shared_ptr<const ReductionTable> reduction_table(unsigned n) {
  static std::map<unsigned, std::shared_ptr<const ReductionTable>> cache;
  {
    std::lock_guard lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const std::vector<long>& phi_poly = cyclotomic_polynomial(n);
  auto table = std::make_shared<ReductionTable>();
  const unsigned phi = static_cast<unsigned>(phi_poly.size() - 1);
  table->phi = phi;
  table->rows.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (unsigned j = 0; j < n; ++j) {
    table->rows[j] = cur;
    // multiply by x and reduce by the monic Phi_n
    const long top = cur[phi - 1];
    for (unsigned k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned k = 0; k < phi; ++k) cur[k] -= top * phi_poly[k];
  }
  std::lock_guard lock(table_mutex());
  return cache.emplace(n, std::move(table)).first->second;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic polynomial of index 0");
  {
    std::lock_guard lock(table_mutex());
    auto it = polynomial_cache().find(n);
    if (it != polynomial_cache().end()) return it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic_polynomial(n);
  }
  std::lock_guard lock(table_mutex());
  return polynomial_cache().emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : n_(1), c_(1, Rational(0)) {}
Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_(1, q) {}
Cyclotomic::Cyclotomic(long q) : n_(1), c_(1, Rational(q)) {}

Cyclotomic Cyclotomic::from_exponents(unsigned n, const std::vector<Rational>& by_exponent) {
  auto table = reduction_table(n);
  std::vector<Rational> out(table->phi, Rational(0));
  for (unsigned j = 0; j < n; ++j) {
    const Rational& a = by_exponent[j];
    if (sgn(a) == 0) continue;
    const auto& row = table->rows[j];
    for (unsigned k = 0; k < table->phi; ++k)
      if (row[k] != 0) out[k] += a * row[k];
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
  if (n == 0) throw InvalidArgument("root of unity of order 0");
  std::vector<Rational> acc(n, Rational(0));
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  acc[static_cast<unsigned>(e)] = 1;
  return from_exponents(n, acc);
}

Cyclotomic Cyclotomic::embed(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw FieldError("cannot embed Q(z" + std::to_string(n_) + ") into Q(z" + std::to_string(m) + ")");
  const unsigned step = m / n_;
  std::vector<Rational> acc(m, Rational(0));
  for (unsigned k = 0; k < c_.size(); ++k) acc[(k * step) % m] += c_[k];
  return from_exponents(m, acc);
}

bool Cyclotomic::is_zero() const {
  for (const auto& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw FieldError("cyclotomic value " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::galois(long a) const {
  long r = a % static_cast<long>(n_);
  if (r < 0) r += n_;
  if (std::gcd(static_cast<unsigned>(r), n_) != 1 && n_ > 1)
    throw FieldError("Galois exponent not coprime to the conductor");
  if (n_ <= 2) return *this;
  std::vector<Rational> acc(n_, Rational(0));
  for (unsigned k = 0; k < c_.size(); ++k) acc[(static_cast<unsigned long>(k) * r) % n_] += c_[k];
  return from_exponents(n_, acc);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw FieldError("inversion of zero");
  if (n_ <= 2) return Cyclotomic(Rational(1) / c_[0]);
  // Solve (multiplication by *this) x = 1 in the power basis.
  const unsigned phi = static_cast<unsigned>(c_.size());
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (unsigned j = 0; j < phi; ++j) {
    Cyclotomic col = *this * root_of_unity(n_, j);
    for (unsigned i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = 1;
  for (unsigned col = 0; col < phi; ++col) {
    unsigned piv = col;
    while (piv < phi && sgn(m[piv][col]) == 0) ++piv;
    if (piv == phi) throw FieldError("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (unsigned k = col; k <= phi; ++k) m[col][k] *= inv;
    for (unsigned r = 0; r < phi; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (unsigned k = col; k <= phi; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> out(phi);
  for (unsigned i = 0; i < phi; ++i) out[i] = m[i][phi];
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    const unsigned m = lcm_u(n_, o.n_);
    *this = embed(m);
    Cyclotomic e = o.embed(m);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += e.c_[k];
    return *this;
  }
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    const unsigned m = lcm_u(n_, o.n_);
    Cyclotomic a = embed(m);
    return *this = a * o.embed(m);
  }
  if (n_ <= 2) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& a : c_) a *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    const Rational s = c_[0];
    *this = o;
    for (auto& a : c_) a *= s;
    return *this;
  }
  std::vector<Rational> acc(n_, Rational(0));
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (unsigned j = 0; j < o.c_.size(); ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      acc[(i + j) % n_] += c_[i] * o.c_[j];
    }
  }
  return *this = from_exponents(n_, acc);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const unsigned m = lcm_u(a.n_, b.n_);
  return a.embed(m).c_ == b.embed(m).c_;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned m = lcm_u(a.n_, b.n_);
  const Cyclotomic x = a.embed(m), y = b.embed(m);
  for (std::size_t k = 0; k < x.c_.size(); ++k) {
    const int c = cmp(x.c_[k], y.c_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return gb::to_string(c_[0]);
  std::string out;
  const std::string z = "z" + std::to_string(n_);
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (sgn(a) == 0) continue;
    std::string term;
    if (k == 0) {
      term = gb::to_string(a);
    } else {
      std::string power = k == 1 ? z : z + "^" + std::to_string(k);
      if (a == 1)
        term = power;
      else if (a == -1)
        term = "-" + power;
      else
        term = gb::to_string(a) + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

Cyclotomic parse_cyclotomic(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty cyclotomic literal");
  Cyclotomic result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = pos + 1;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view term = text.substr(pos, end - pos);
    pos = end;
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) throw InvalidArgument("malformed cyclotomic literal '" + std::string(text) + "'");
    Rational coef(1);
    std::string_view root = term;
    const auto star = term.find('*');
    if (star != std::string_view::npos) {
      coef = parse_rational(term.substr(0, star));
      root = term.substr(star + 1);
    } else if (term.front() != 'z') {
      coef = parse_rational(term);
      root = {};
    }
    Cyclotomic value(coef);
    if (!root.empty()) {
      if (root.front() != 'z') throw InvalidArgument("malformed cyclotomic literal '" + std::string(text) + "'");
      root.remove_prefix(1);
      const auto caret = root.find('^');
      const std::string n_str(root.substr(0, caret));
      const std::string k_str = caret == std::string_view::npos ? "1" : std::string(root.substr(caret + 1));
      try {
        const unsigned long n = std::stoul(n_str);
        const long k = std::stol(k_str);
        if (n == 0) throw InvalidArgument("zero conductor");
        value *= Cyclotomic::root_of_unity(static_cast<unsigned>(n), k);
      } catch (const std::logic_error&) {
        throw InvalidArgument("malformed cyclotomic literal '" + std::string(text) + "'");
      }
    }
    if (negative) value = -value;
    result += value;
  }
  return result;
}

}  // namespace gb
