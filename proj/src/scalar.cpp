#include "greenbiset/scalar.hpp"

#include "greenbiset/error.hpp"

namespace gb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModP::ModP(std::uint64_t q, std::int64_t value) : q_(q) {
  if (q < 2) throw FieldError("prime field modulus must be at least 2");
  const auto sq = static_cast<std::int64_t>(q);
  std::int64_t r = value % sq;
  if (r < 0) r += sq;
  v_ = static_cast<std::uint64_t>(r);
}

void ModP::check(const ModP& o) const {
  if (o.q_ != q_)
    throw FieldError("mixed prime fields F" + std::to_string(q_) + " and F" + std::to_string(o.q_));
}

ModP& ModP::operator+=(const ModP& o) {
  check(o);
  v_ = (v_ + o.v_) % q_;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check(o);
  v_ = (v_ + q_ - o.v_) % q_;
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check(o);
  v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % q_);
  return *this;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw FieldError("inversion of zero in F" + std::to_string(q_));
  std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(q_);
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    const std::int64_t t = a / m;
    std::int64_t tmp = a - t * m;
    a = m;
    m = tmp;
    tmp = x0 - t * x1;
    x0 = x1;
    x1 = tmp;
  }
  if (a != 1) throw FieldError("element not invertible modulo " + std::to_string(q_));
  return ModP(q_, x0);
}

std::string ModP::to_string() const { return std::to_string(v_) + " mod " + std::to_string(q_); }

Field Field::prime(std::uint64_t q) {
  if (!is_prime(q)) throw InvalidArgument("field characteristic " + std::to_string(q) + " is not prime");
  return {Kind::PrimeField, q};
}

std::string Field::name() const {
  switch (kind) {
    case Kind::Rational: return "Q";
    case Kind::Cyclotomic: return "Cyc";
    case Kind::PrimeField: return "F" + std::to_string(modulus);
  }
  return "?";
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long n) {
  switch (f.kind) {
    case Field::Kind::Rational: return Scalar(Rational(n));
    case Field::Kind::Cyclotomic: return Scalar(Cyclotomic(n));
    case Field::Kind::PrimeField: return Scalar(ModP(f.modulus, n));
  }
  return Scalar();
}

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
  switch (f.kind) {
    case Field::Kind::Rational: return Scalar(q);
    case Field::Kind::Cyclotomic: return Scalar(Cyclotomic(q));
    case Field::Kind::PrimeField: {
      const Integer num = q.get_num() % Integer(static_cast<unsigned long>(f.modulus));
      const Integer den = q.get_den() % Integer(static_cast<unsigned long>(f.modulus));
      ModP n(f.modulus, num.get_si());
      ModP d(f.modulus, den.get_si());
      n *= d.inverse();
      return Scalar(n);
    }
  }
  return Scalar();
}

Field Scalar::field() const {
  if (std::holds_alternative<Rational>(v_)) return Field::rationals();
  if (std::holds_alternative<Cyclotomic>(v_)) return Field::cyclotomics();
  return Field::prime(std::get<ModP>(v_).modulus());
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<Rational>(&v_)) return sgn(*q) == 0;
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return c->is_zero();
  return std::get<ModP>(v_).value() == 0;
}

Scalar Scalar::inverse() const {
  if (auto* q = std::get_if<Rational>(&v_)) {
    if (sgn(*q) == 0) throw FieldError("inversion of zero");
    return Scalar(Rational(1) / *q);
  }
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return Scalar(c->inverse());
  return Scalar(std::get<ModP>(v_).inverse());
}

const Rational& Scalar::as_rational() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q;
  throw FieldError("scalar " + to_string() + " is not stored as a rational");
}

Rational Scalar::to_rational() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q;
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return c->rational_value();
  throw FieldError("prime-field scalar has no rational value");
}

Cyclotomic Scalar::to_cyclotomic() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Cyclotomic(*q);
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return *c;
  throw FieldError("prime-field scalar has no cyclotomic value");
}

const ModP& Scalar::as_modp() const {
  if (auto* m = std::get_if<ModP>(&v_)) return *m;
  throw FieldError("scalar " + to_string() + " is not a prime-field residue");
}

namespace {

[[noreturn]] void mixed(const Scalar& a, const Scalar& b) {
  throw FieldError("mixed fields: " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (v_.index() == o.v_.index()) {
    std::visit(
        [&](auto& x) {
          using T = std::decay_t<decltype(x)>;
          x += std::get<T>(o.v_);
        },
        v_);
    return *this;
  }
  if (std::holds_alternative<ModP>(v_) || std::holds_alternative<ModP>(o.v_)) mixed(*this, o);
  v_ = to_cyclotomic() + o.to_cyclotomic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (v_.index() == o.v_.index()) {
    std::visit(
        [&](auto& x) {
          using T = std::decay_t<decltype(x)>;
          x *= std::get<T>(o.v_);
        },
        v_);
    return *this;
  }
  if (std::holds_alternative<ModP>(v_) || std::holds_alternative<ModP>(o.v_)) mixed(*this, o);
  v_ = to_cyclotomic() * o.to_cyclotomic();
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) -> Scalar { return Scalar(-x); }, v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == b.v_.index())
    return std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          return x == std::get<T>(b.v_);
        },
        a.v_);
  if (std::holds_alternative<ModP>(a.v_) || std::holds_alternative<ModP>(b.v_)) return false;
  return a.to_cyclotomic() == b.to_cyclotomic();
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<Rational>(&v_)) return gb::to_string(*q);
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return c->to_string();
  return std::get<ModP>(v_).to_string();
}

Scalar parse_scalar(std::string_view text, const Field& f) {
  switch (f.kind) {
    case Field::Kind::Rational: return Scalar(parse_rational(text));
    case Field::Kind::Cyclotomic: return Scalar(parse_cyclotomic(text));
    case Field::Kind::PrimeField: {
      const auto sp = text.find(" mod ");
      std::string_view value = sp == std::string_view::npos ? text : text.substr(0, sp);
      if (sp != std::string_view::npos) {
        const std::string q(text.substr(sp + 5));
        if (std::stoull(q) != f.modulus) throw FieldError("residue modulus does not match field " + f.name());
      }
      const Rational r = parse_rational(value);
      return Scalar::from_rational(f, r);
    }
  }
  return Scalar();
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace gb
