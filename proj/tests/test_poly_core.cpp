#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "support.hpp"

using namespace gitstab;
using testing::Rng;

namespace {

HomogeneousPoly P(const char* text, int n) { return parse_poly(text, n); }

RationalMatrix diag(std::initializer_list<int> entries) {
  RationalMatrix m = RationalMatrix::Zero(entries.size(), entries.size());
  int i = 0;
  for (int v : entries) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(ceil(Rational(7, 7)) == 1);
  auto v = primitive_integer_vector({Rational(1, 2), Rational(-3, 4), Rational(0)});
  CHECK(v == std::vector<Integer>{2, -3, 0});
  CHECK_THROWS_AS(to_int64(Integer("100000000000000000000")), std::overflow_error);
}

TEST_CASE("parse examples") {
  auto f = P("x0^2*x2 + x1^3", 2);
  CHECK(f.degree() == 3);
  CHECK(f.terms().size() == 2);
  CHECK(f.poly().coefficient({2, 0, 1}) == 1);
  CHECK(f.poly().coefficient({0, 3, 0}) == 1);

  auto g = P("x0^3 - x0^3 + x1^3", 1);
  CHECK(g.terms().size() == 1);
  CHECK(g.poly().coefficient({0, 3}) == 1);

  CHECK_THROWS_AS(P("x0^2 + x1^3", 1), std::invalid_argument);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("x0^3 - x0^3", 2), std::invalid_argument);  // zero polynomial
  CHECK_THROWS_AS(P("x3^3", 2), std::invalid_argument);
  CHECK_THROWS_AS(P("x0^3 +", 2), ParseError);
  CHECK_THROWS_AS(P("x0^3 + 2*", 2), ParseError);
  CHECK_THROWS_AS(P("y0^3", 2), ParseError);
  try {
    P("x0^3 + x1^3 $", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 12);
  }
}

TEST_CASE("parse coefficients and whitespace") {
  auto f = P("  1/2 * x0^3 -3*x1 ^ 2*x2 + x2*x2*x2 ", 2);
  CHECK(f.poly().coefficient({3, 0, 0}) == Rational(1, 2));
  CHECK(f.poly().coefficient({0, 2, 1}) == -3);
  CHECK(f.poly().coefficient({0, 0, 3}) == 1);
  CHECK(to_string(f) == "1/2*x0^3 - 3*x1^2*x2 + x2^3");
  CHECK(to_string(P("-x0*x1*x2", 2)) == "-x0*x1*x2");
}

TEST_CASE("canonical output uses graded-lex order") {
  CHECK(to_string(P("x1^3 + x0^2*x2", 2)) == "x0^2*x2 + x1^3");
  CHECK(to_string(P("x2^3 + x0*x1*x2 + x0^3", 2)) == "x0^3 + x0*x1*x2 + x2^3");
}

TEST_CASE("linear change examples") {
  auto f = P("x0^2*x2 + x1^3", 2);
  CHECK(apply_linear_change(f, identity_matrix(3)) == f);

  auto g = P("x0*x2*x3 + x1^3", 3);
  CHECK(apply_linear_change(g, permutation_matrix({0, 2, 1, 3})) == P("x0*x1*x3 + x2^3", 3));

  auto h = P("x0^2*x1 + x1^2*x2", 2);
  CHECK(apply_linear_change(h, diag({1, 2, 1})) == P("2*x0^2*x1 + 4*x1^2*x2", 2));
}

TEST_CASE("linear change errors") {
  auto f = P("x0^2*x2 + x1^3", 2);
  RationalMatrix singular = RationalMatrix::Zero(3, 3);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(apply_linear_change(f, singular), std::domain_error);
  CHECK_THROWS_AS(apply_linear_change(f, identity_matrix(4)), std::invalid_argument);
}

TEST_CASE("dehomogenize examples") {
  auto chart = dehomogenize_at_last(P("x0^2*x2 + x1^3", 2));
  CHECK(to_string(chart) == "x1^3 + x0^2");
  CHECK(to_string(dehomogenize_at_last(P("x0^3 + x1^3 + x2^3", 2))) == "x0^3 + x1^3 + 1");
  CHECK(to_string(dehomogenize_at_last(P("x0^2*x3^2 + x0*x2^3 + x1^4", 3))) ==
        "x0*x2^3 + x1^4 + x0^2");
}

TEST_CASE("partial derivative examples") {
  CHECK(to_string(partial_derivative(P("x0^2*x2", 2), 0)) == "2*x0*x2");
  CHECK(to_string(partial_derivative(P("x0^2*x2 + x1^3", 2), 2)) == "x0^2");
  auto zero = partial_derivative(P("x0^2*x2", 2), 1);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 2);
  CHECK_THROWS_AS(partial_derivative(P("x0^2*x2", 2), 3), std::out_of_range);
}

TEST_CASE("evaluate examples") {
  auto f = P("x0^2*x2 + x1^3", 2);
  std::vector<Rational> ones{1, 1, 1}, q{0, 0, 1}, p{1, 2, 3};
  CHECK(evaluate(f, ones) == 2);
  CHECK(evaluate(f, q) == 0);
  CHECK(evaluate(P("x0*x1*x2", 2), p) == 6);
  std::vector<Rational> short_point{1, 1};
  CHECK_THROWS_AS(evaluate(f, short_point), std::invalid_argument);
}

TEST_CASE("all_monomials") {
  auto m = all_monomials(3, 3);
  CHECK(m.size() == 10);
  CHECK(m.front() == ExponentVector{3, 0, 0});
  CHECK(m.back() == ExponentVector{0, 0, 3});
  CHECK(all_monomials(5, 4).size() == 70);
}

TEST_CASE("exact matrices") {
  RationalMatrix a(3, 3);
  a << 1, 2, 3, 4, 5, 6, 7, 8, 10;
  CHECK(exact_determinant(a) == -3);
  CHECK(exact_inverse(a) * a == identity_matrix(3));
  RationalMatrix b(3, 3);
  b << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK(exact_rank(b) == 2);
  CHECK(exact_determinant(b) == 0);
  CHECK_THROWS_AS(exact_inverse(b), std::domain_error);
  Eigen::Matrix<long, 2, 3> small;
  small << 1, 2, 3, 2, 4, 6;
  CHECK(exact_rank(small) == 1);
}

TEST_CASE("point_to_last_frame sends p to the last coordinate point") {
  for (auto p : {std::vector<Integer>{0, 0, 1}, {1, 0, 0}, {2, -1, 0}, {1, 2, 3}, {0, 1, 0, 0}}) {
    RationalMatrix m = point_to_last_frame(p);
    CHECK(exact_determinant(m) != 0);
    const auto n = p.size() - 1;
    for (std::size_t j = 0; j < p.size(); ++j) CHECK(m(n, j) == Rational(p[j]));
  }
}

// Properties.

TEST_CASE("property: round trip through text") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 4), d = rng.uniform(1, 5);
    auto f = testing::random_form(rng, n, d);
    CHECK(parse_poly(to_string(f), n) == f);
  }
}

TEST_CASE("property: linear change agrees with naive expansion") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 3), d = rng.uniform(3, 4);
    auto f = testing::random_form(rng, n, d);
    auto sigma = testing::random_invertible(rng, n + 1, 2);
    CHECK(testing::to_map(apply_linear_change(f, sigma).poly()) == testing::naive_substitute(f, sigma));
  }
}

TEST_CASE("property: group action and linearity") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(2, 3), d = rng.uniform(3, 4);
    auto f = testing::random_form(rng, n, d);
    auto g = testing::random_form(rng, n, d);
    auto sigma = testing::random_invertible(rng, n + 1, 2);
    auto tau = testing::random_invertible(rng, n + 1, 2);
    CHECK(apply_linear_change(apply_linear_change(f, tau), sigma) == apply_linear_change(f, sigma * tau));
    CHECK(apply_linear_change(f, identity_matrix(n + 1)) == f);
    Polynomial sum = f.poly() + g.poly();
    if (sum.is_zero()) continue;
    auto lhs = apply_linear_change(HomogeneousPoly(sum, d), sigma).poly();
    CHECK(lhs == apply_linear_change(f, sigma).poly() + apply_linear_change(g, sigma).poly());
  }
}

TEST_CASE("property: linear change is evaluation at sigma^T y") {
  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(2, 4);
    auto f = testing::random_form(rng, n, 3);
    auto sigma = testing::random_invertible(rng, n + 1, 3);
    std::vector<Rational> y(n + 1);
    for (auto& v : y) v = Rational(rng.uniform(-4, 4), rng.uniform(1, 3));
    RationalVector yv = Eigen::Map<RationalVector>(y.data(), n + 1);
    RationalVector x = sigma.transpose() * yv;
    std::vector<Rational> xs(x.data(), x.data() + n + 1);
    CHECK(evaluate(apply_linear_change(f, sigma), y) == evaluate(f, xs));
  }
}

TEST_CASE("property: Euler relation") {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(1, 4), d = rng.uniform(1, 5);
    auto f = testing::random_form(rng, n, d);
    Polynomial euler(n + 1);
    for (int j = 0; j <= n; ++j) euler += Polynomial::variable(n + 1, j) * partial_derivative(f, j).poly();
    CHECK(euler == Rational(d) * f.poly());
  }
}

TEST_CASE("property: derivative matches the naive one and is linear") {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(1, 4), d = rng.uniform(2, 5);
    auto f = testing::random_form(rng, n, d);
    auto g = testing::random_form(rng, n, d);
    const int j = rng.uniform(0, n);
    CHECK(testing::to_map(partial_derivative(f, j).poly()) == testing::differentiate(testing::to_map(f.poly()), j));
    CHECK((f.poly() + g.poly()).derivative(j) == f.poly().derivative(j) + g.poly().derivative(j));
  }
}

TEST_CASE("property: dehomogenize then rehomogenize") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(1, 4), d = rng.uniform(1, 5);
    auto f = testing::random_form(rng, n, d);
    CHECK(rehomogenize_at_last(dehomogenize_at_last(f), d) == f);
  }
}

TEST_CASE("property: exact rank matches naive elimination") {
  Rng rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
    RationalMatrix m = testing::random_matrix(rng, rows, cols, 2);
    if (rng.coin()) m.row(0) = m.row(rows - 1) * Rational(rng.uniform(-2, 2), 3);
    CHECK(exact_rank(m) == testing::naive_rank(m));
    if (rows == cols) {
      RationalMatrix other = testing::random_matrix(rng, rows, cols, 2);
      CHECK(exact_determinant(RationalMatrix(m * other)) == exact_determinant(m) * exact_determinant(other));
    }
  }
}
