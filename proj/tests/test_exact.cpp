#include <doctest.h>

#include <random>

#include "greenbiset/cyclotomic.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/linalg.hpp"
#include "greenbiset/polynomial.hpp"
#include "greenbiset/scalar.hpp"

using namespace gb;

namespace {

Matrix rat_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Field::rationals());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Scalar(rows[r][c]);
  return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c, Field::rationals());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(Rational(d(rng), 1 + std::abs(d(rng))));
  return m;
}

}  // namespace

TEST_CASE("rational strings round-trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
}

TEST_CASE("cyclotomic arithmetic") {
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK((z3 + z3 * z3) == Cyclotomic(Rational(-1)));
  const Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  CHECK(z5.conj() == z5 * z5 * z5 * z5);
  const Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4 * z4 == Cyclotomic(Rational(-1)));
  for (long n : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
    const Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    // Phi_n(z) = 0 with the cached polynomial
    const auto phi = cyclotomic_polynomial(n);
    Cyclotomic acc(Rational(0)), p(Rational(1));
    for (const auto& c : phi) {
      acc = acc + p * Cyclotomic(c);
      p = p * z;
    }
    CHECK(acc.is_zero());
    CHECK(z.conj().conj() == z);
    CHECK((z * z.inverse()) == Cyclotomic(Rational(1)));
  }
  // embedding into a larger conductor is exact
  CHECK(z3.embed(12) == Cyclotomic::root_of_unity(12, 1) * Cyclotomic::root_of_unity(12, 1) * Cyclotomic::root_of_unity(12, 1) *
                            Cyclotomic::root_of_unity(12, 1));
  CHECK_THROWS_AS(Cyclotomic(Rational(0)).inverse(), FieldError);
}

TEST_CASE("scalar strings") {
  CHECK(Scalar(Rational(3, 2)).to_string() == "3/2");
  CHECK(Scalar(ModP(7, 11)).to_string() == "4 mod 7");
  const Scalar z = parse_scalar("z5^2+1", Field::cyclotomics());
  CHECK(z.to_string() == "z5^2+1");
  CHECK(parse_scalar("4 mod 7", Field::prime(7)) == Scalar(ModP(7, 4)));
  CHECK_THROWS_AS(Scalar(ModP(7, 1)) + Scalar(Rational(1)), FieldError);
}

TEST_CASE("rank and kernels") {
  CHECK(rank(Matrix::identity(3, Field::rationals())) == 3);
  CHECK(rank(Matrix(4, 3, Field::rationals())) == 0);
  const Matrix ones = rat_matrix({{1, 1}, {1, 1}});
  const auto ker = radical_of_symmetric_form(ones);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Scalar(-1));
  CHECK(ker[0][1] == Scalar(1));
  CHECK(radical_of_symmetric_form(Matrix::identity(4, Field::rationals())).empty());
  CHECK_THROWS_AS(radical_of_symmetric_form(Matrix(2, 3, Field::rationals())), InvalidArgument);

  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const Matrix m = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 5);
    CHECK(rank(m) == rank(m.transpose()));
    for (const auto& v : kernel_basis(m)) CHECK(is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("solve_linear") {
  const Vec b{Scalar(Rational(1)), Scalar(Rational(-2, 3))};
  CHECK(*solve_linear(Matrix::identity(2, Field::rationals()), b) == b);
  const Matrix z = rat_matrix({{0, 0}, {1, 0}});
  CHECK_FALSE(solve_linear(z, Vec{Scalar(1), Scalar(0)}).has_value());
  // marks of C2 acting on coefficient vectors
  const Matrix marks = rat_matrix({{2, 1}, {0, 1}});
  const auto x = solve_linear(marks, Vec{Scalar(1), Scalar(0)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(Rational(1, 2)));
  CHECK((*x)[1] == Scalar(0));
  CHECK_THROWS_AS(solve_linear(marks, Vec{Scalar(1)}), InvalidArgument);
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(Matrix::identity(3, Field::rationals())).positive_definite);
  const auto r = is_positive_definite(rat_matrix({{1, 0}, {0, -1}}));
  CHECK_FALSE(r.positive_definite);
  REQUIRE(r.witness);
  CHECK(r.witness_value <= 0);
  const auto z = is_positive_definite(rat_matrix({{1, 1, 0}, {1, 1, 2}, {0, 2, 1}}));
  CHECK_FALSE(z.positive_definite);
  REQUIRE(z.witness);
  CHECK(z.witness_value <= 0);
  CHECK(bilinear_value(rat_matrix({{1, 1, 0}, {1, 1, 2}, {0, 2, 1}}), *z.witness, *z.witness) == z.witness_value);
  CHECK_THROWS_AS(is_positive_definite(rat_matrix({{1, 2}, {0, 1}})), InvalidArgument);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(rng, 3, 3);
    Matrix s = a.transpose() * a;
    for (std::size_t i = 0; i < 3; ++i) s(i, i) += Scalar(Rational(1, 3));
    const auto res = is_positive_definite(s);
    REQUIRE(res.positive_definite);
    for (int k = 0; k < 100; ++k) {
      std::vector<Rational> v{Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))),
                              Rational(d(rng), 1 + std::abs(d(rng)))};
      if (sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0) continue;
      CHECK(bilinear_value(s, v, v) > 0);
    }
  }
}

TEST_CASE("inverse") {
  const Matrix m = rat_matrix({{2, 1}, {0, 1}});
  CHECK(inverse(m) * m == Matrix::identity(2, Field::rationals()));
  CHECK_THROWS_AS(inverse(rat_matrix({{1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("mixed fields are rejected") {
  Matrix m(2, 2, Field::rationals());
  m(0, 0) = Scalar(ModP(5, 1));
  CHECK_THROWS_AS(rank(m), FieldError);
  Matrix c(1, 2, Field::cyclotomics());
  c(0, 0) = Scalar(Rational(1));
  c(0, 1) = Scalar(Cyclotomic::root_of_unity(3, 1));
  CHECK(rank(c) == 1);
}

TEST_CASE("prime field elimination") {
  Matrix m(2, 2, Field::prime(2));
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = Scalar(ModP(2, 1));
  CHECK(rank(m) == 1);
}

TEST_CASE("polynomials") {
  const QPoly p({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  CHECK(rational_roots(p).empty());
  CHECK(irreducible_mod_prime(p, 5));
  const QPoly q({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  CHECK(rational_roots(q) == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK_FALSE(irreducible_mod_prime(q, 5));
  const QPoly r({Rational(0), Rational(-1, 2), Rational(1)});  // x^2 - x/2
  CHECK(rational_roots(r) == std::vector<Rational>{Rational(0), Rational(1, 2)});
  const Matrix m = rat_matrix({{0, 1}, {2, 0}});
  const QPoly mp = annihilating_polynomial(m, Vec{Scalar(1), Scalar(0)});
  CHECK(mp == p);
  CHECK(gcd(p * q, q * QPoly({Rational(3), Rational(1)})) == q);
}
