#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "greenbiset/rational.hpp"

namespace gb {

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// Exact element of the cyclotomic field Q(z_n), stored in the power basis
/// 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial.
///
/// Values carry their own conductor; binary operations embed both operands in
/// Q(z_lcm) first (z_n = z_m^(m/n)). Equality is equality of field elements,
/// independent of the conductor used to store them.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  Cyclotomic(const Rational& q);  // NOLINT: rationals embed implicitly
  Cyclotomic(long q);             // NOLINT

  /// z_n^k.
  static Cyclotomic root_of_unity(unsigned n, long k);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Same element stored in Q(z_m); m must be a multiple of the conductor.
  Cyclotomic embed(unsigned m) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws FieldError unless is_rational().
  Rational rational_value() const;

  /// Complex conjugation z -> z^-1.
  Cyclotomic conj() const;
  /// Galois automorphism z -> z^a, gcd(a, n) = 1.
  Cyclotomic galois(long a) const;
  /// Throws FieldError on zero.
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Lexicographic order of power-basis coefficients in a common field.
  /// A total order used only for deterministic sorting.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

  /// e.g. "z5^2+1", "-z3-1", "3/2". Highest power first.
  std::string to_string() const;

 private:
  Cyclotomic(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static Cyclotomic from_exponents(unsigned n, const std::vector<Rational>& by_exponent);

  unsigned n_ = 1;
  std::vector<Rational> c_;
};

/// Parses the format written by Cyclotomic::to_string ("z5^2+1", "3/2*z12^5-z12").
Cyclotomic parse_cyclotomic(std::string_view text);

}  // namespace gb
