#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "greenbiset/matrix.hpp"
#include "greenbiset/rational.hpp"

namespace gb {

/// Dense univariate polynomial over Q, constant term first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;
  QPoly monic() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Quotient and remainder.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly gcd(QPoly a, QPoly b);  // monic

/// Minimal polynomial of M relative to v: the monic p of least degree with
/// p(M) v = 0 (Krylov sequence). Rational matrices only.
QPoly annihilating_polynomial(const Matrix& m, const Vec& v);

/// All distinct rational roots (rational root theorem on the primitive
/// integer multiple).
std::vector<Rational> rational_roots(const QPoly& p);

/// True when p (integer coefficients after scaling) stays squarefree and
/// irreducible modulo the prime q. A true result proves irreducibility over Q.
bool irreducible_mod_prime(const QPoly& p, std::uint64_t q);

}  // namespace gb
