#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "greenbiset/cyclotomic.hpp"
#include "greenbiset/rational.hpp"

namespace gb {

bool is_prime(std::uint64_t n);

/// Residue modulo a prime q, kept in [0, q).
class ModP {
 public:
  ModP(std::uint64_t q, std::int64_t value);
  std::uint64_t modulus() const { return q_; }
  std::uint64_t value() const { return v_; }
  ModP inverse() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP operator-() const { return ModP(q_, -static_cast<std::int64_t>(v_)); }
  friend bool operator==(const ModP& a, const ModP& b) { return a.q_ == b.q_ && a.v_ == b.v_; }

  /// "4 mod 7".
  std::string to_string() const;

 private:
  void check(const ModP& o) const;
  std::uint64_t q_;
  std::uint64_t v_;
};

/// The coefficient field of a computation.
struct Field {
  enum class Kind { Rational, Cyclotomic, PrimeField };
  Kind kind = Kind::Rational;
  std::uint64_t modulus = 0;  // PrimeField only

  static Field rationals() { return {Kind::Rational, 0}; }
  static Field cyclotomics() { return {Kind::Cyclotomic, 0}; }
  static Field prime(std::uint64_t q);

  std::uint64_t characteristic() const { return kind == Kind::PrimeField ? modulus : 0; }
  std::string name() const;  // "Q", "Cyc", "F7"
  friend bool operator==(const Field&, const Field&) = default;
};

/// Tagged exact scalar: a rational, a cyclotomic number, or a prime-field
/// residue. Rationals mix freely with cyclotomics; anything else mixed
/// raises FieldError.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) {}  // NOLINT
  Scalar(long q) : v_(Rational(q)) {}   // NOLINT
  Scalar(int q) : v_(Rational(q)) {}    // NOLINT
  Scalar(const Cyclotomic& c) : v_(c) {}  // NOLINT
  Scalar(const ModP& m) : v_(m) {}  // NOLINT

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long n);
  static Scalar from_rational(const Field& f, const Rational& q);

  Field field() const;
  bool is_zero() const;
  Scalar inverse() const;

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& as_rational() const;  // throws FieldError unless rational-valued storage
  Rational to_rational() const;         // also accepts rational cyclotomics
  Cyclotomic to_cyclotomic() const;
  const ModP& as_modp() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Exact string: "3/2", "z5^2+1", "4 mod 7".
  std::string to_string() const;

 private:
  std::variant<Rational, Cyclotomic, ModP> v_;
};

/// Inverse of Scalar::to_string for the given field.
Scalar parse_scalar(std::string_view text, const Field& f);

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);
std::string to_string(const Vec& v);

}  // namespace gb
