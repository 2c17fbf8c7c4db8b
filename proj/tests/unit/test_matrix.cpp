#include <doctest.h>

#include "contractkit/matrix.hpp"
#include "support/generators.hpp"

using namespace contractkit;

TEST_CASE("parse_rational accepts integers, fractions and decimals exactly") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("0.8") == Rational(4, 5));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1.25e-2") == Rational(1, 80));
  CHECK(parse_rational("2E3") == 2000);
  CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("rationals stay canonical after arithmetic") {
  Rational a = parse_rational("6/4");
  Rational b = a * Rational(2, 3) - Rational(1, 3);
  CHECK(b.get_den() > 0);
  CHECK(to_string(b) == "2/3");
  CHECK(to_string(Rational(-4) / 2) == "-2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
}

TEST_CASE("matrix arithmetic and stacking") {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b = Matrix::identity(2);
  CHECK(a * b == a);
  CHECK((a - a).is_zero());
  CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
  CHECK(hstack(a, b).cols() == 4);
  CHECK(vstack(a, b).rows() == 4);
  Matrix d = block_diag(a, Matrix(0, 3));
  CHECK(d.rows() == 2);
  CHECK(d.cols() == 5);
  CHECK_THROWS_AS(a * Matrix(3, 1), DimensionMismatch);
  CHECK_THROWS_AS(hstack(a, Matrix(3, 1)), DimensionMismatch);
}

TEST_CASE("rref, rank and nullspace") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  Matrix n = nullspace(m);
  CHECK(n.cols() == 1);
  CHECK((m * n).is_zero());
  CHECK(rank(Matrix(0, 4)) == 0);
  CHECK(nullspace(Matrix(0, 3)) == Matrix::identity(3));
  CHECK(nullspace(Matrix::identity(3)).cols() == 0);
}

TEST_CASE("solve finds a solution or reports inconsistency") {
  Matrix m{{1, 1}, {1, -1}};
  auto x = solve(m, Vector{Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  Matrix singular{{1, 1}, {2, 2}};
  CHECK_FALSE(solve(singular, Vector{Rational(1), Rational(3)}));
  CHECK(solve(singular, Vector{Rational(1), Rational(2)}));
}

TEST_CASE("rank-nullity on random matrices") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(testing::uniform_int(rng, 0, 4));
    const auto c = static_cast<std::size_t>(testing::uniform_int(rng, 0, 4));
    Matrix m = testing::random_matrix(rng, r, c);
    Matrix n = nullspace(m);
    CHECK(rank(m) + n.cols() == c);
    CHECK((m * n).is_zero());
  }
}
