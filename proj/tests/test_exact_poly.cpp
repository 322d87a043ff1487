#include "doctest.h"
#include "generators.hpp"

#include "rct/parse.hpp"
#include "rct/univariate.hpp"

using namespace rct;
using rct::testing::Rng;

namespace {
SparsePoly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("natural variable order") {
  CHECK(natural_less("x2", "x10"));
  CHECK(natural_less("a1", "a2"));
  CHECK(natural_less("u0_9", "u0_10"));
  CHECK(natural_less("u0_10", "u1_0"));
  CHECK_FALSE(natural_less("x", "x"));
}

TEST_CASE("ring operations") {
  CHECK(P("(x-1)*(x+1)") == P("x^2-1"));
  auto f = P("x^3 - 2*x*y + 1/3");
  CHECK(f + SparsePoly() == f);
  CHECK(f - f == SparsePoly());
  CHECK((-f).to_string() == "-x^3 + 2*x*y - 1/3");
  CHECK(P("x0^2 - 3/2*x1*x2").to_string() == "x0^2 - 3/2*x1*x2");
  CHECK(P("2*(a+b)^2").coefficient({1, 1}) == 4);
}

TEST_CASE("degrees and zero sentinel") {
  SparsePoly zero({"x"});
  CHECK(zero.total_degree() == kZeroDegree);
  CHECK(zero.degree_in("x") == kZeroDegree);
  CHECK(P("x^2*y + y^3").homogeneous_degree() == 3);
  CHECK_FALSE(P("x^2 + y").homogeneous_degree().has_value());
  CHECK(P("x^4*y + 1").degree_in("x") == 4);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(11);
  std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    auto a = testing::random_poly(rng, vars, 5, 3);
    auto b = testing::random_poly(rng, {"y", "w"}, 4, 3);
    auto c = testing::random_poly(rng, vars, 4, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact division") {
  auto a = P("x^2 + 3*x*y - 2*y^2 + 5");
  auto b = P("x*y - 7/3*z + 1");
  auto q = divide_exact(a * b, b);
  REQUIRE(q.has_value());
  CHECK(*q == a);
  CHECK_FALSE(divide_exact(a * b + P("x"), b).has_value());
  CHECK_THROWS_AS(divide_exact(a, SparsePoly()), std::domain_error);
}

TEST_CASE("univariate divmod examples") {
  auto [q1, r1] = poly_divmod(P("x^2-1"), P("x-1"));
  CHECK(q1 == P("x+1"));
  CHECK(r1.is_zero());

  auto [q2, r2] = poly_divmod(P("x^3"), P("x"));
  CHECK(q2 == P("x^2"));
  CHECK(r2.is_zero());

  // Hand Euclidean step: x^2 + a1 x + a2 = (x/2 + a1/4)(2x + a1) + (a2 - a1^2/4).
  auto [q3, r3] = poly_divmod(P("x^2+a1*x+a2"), P("2*x+a1"), "x");
  CHECK(q3 == P("x/2 + a1/4"));
  CHECK(r3 == P("a2 - a1^2/4"));

  CHECK_THROWS_AS(poly_divmod(P("x^2"), SparsePoly({"x"})), std::domain_error);
}

TEST_CASE("divmod round trip on 1000 random univariate pairs") {
  Rng rng(2024);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int i = 0; i < 1000; ++i) {
    auto f = testing::random_unipoly(rng, deg(rng));
    auto g = testing::random_unipoly(rng, deg(rng));
    auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("pseudo division identity") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto f = testing::random_poly(rng, {"x", "a1", "a2"}, 6, 4);
    auto g = testing::random_poly(rng, {"x", "a1"}, 4, 3);
    if (g.degree_in("x") < 1 || f.degree_in("x") < g.degree_in("x")) continue;
    auto [q, r] = pseudo_divmod(f, g, "x");
    auto lc = g.coefficients_in("x").back();
    auto scale = lc.pow(static_cast<unsigned>(f.degree_in("x") - g.degree_in("x") + 1));
    CHECK(scale * f == q * g + r);
    CHECK(r.degree_in("x") < g.degree_in("x"));
  }
}

TEST_CASE("shd examples") {
  auto a = P("a1^2 + a1*a3");
  CHECK(shd({2, 0}, {"a1", "a3"}) == 2);
  CHECK(shd({1, 1}, {"a1", "a3"}) == 4);
  CHECK_FALSE(is_substitutable_homogeneous(a));
  auto disc = P("a1^2 - 4*a2");
  REQUIRE(substituted_degree(disc).value() == 2);
  CHECK(substituted_degree(SparsePoly({"a1"})).is_any());
  CHECK(substituted_degree(SparsePoly({"a1"})).compatible_with(17));
  CHECK_THROWS_AS(shd_weight("x"), std::invalid_argument);
}

TEST_CASE("substitute_graded examples") {
  auto f = P("a1^2 - 4*a2");
  auto out = substitute_graded(f, {P("x1+x2"), P("x1*x2")});
  CHECK(out == P("(x1-x2)^2"));
  CHECK(out.homogeneous_degree() == 2);

  CHECK(substitute_graded(P("a2"), {P("x1"), SparsePoly({"x1"})}).is_zero());

  auto g4 = substitute_graded(P("a1*a3"), {P("x1 - 2*x2"), P("x1*x2"), P("x1^3 + x2^3")});
  CHECK(g4.homogeneous_degree() == 4);

  CHECK_THROWS_AS(substitute_graded(P("a1 + a2"), {P("x1"), P("x1^2")}), std::invalid_argument);
  CHECK_THROWS_AS(substitute_graded(P("a2"), {P("x1"), P("x1")}), std::invalid_argument);
}

TEST_CASE("substitute_graded output is homogeneous of degree shd") {
  Rng rng(99);
  std::vector<std::string> xs{"x1", "x2", "x3"};
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    int weight = std::uniform_int_distribution<int>(1, 6)(rng);
    auto f = testing::random_substitutable(rng, n, weight, 4);
    std::vector<SparsePoly> g;
    for (int j = 1; j <= n; ++j) g.push_back(testing::random_homogeneous(rng, xs, j, 3));
    auto out = substitute_graded(f, g);
    if (!out.is_zero()) CHECK(out.homogeneous_degree() == *substituted_degree(f).value());
  }
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_poly("x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly("x / y"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("format then parse is the identity on canonical forms") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto f = testing::random_poly(rng, {"x0", "x1", "a2", "b_3"}, 6, 4);
    CHECK(parse_poly(f.to_string()) == f);
  }
}

TEST_CASE("primitive part and projective equality") {
  Rational removed;
  auto p = primitive_part(P("6*x^2 - 9/2*y"), &removed);
  CHECK(p == P("4*x^2 - 3*y"));
  CHECK(removed == Rational(3, 2));
  CHECK(projectively_equal(P("2*x + 4*y"), P("-x - 2*y")));
  CHECK_FALSE(projectively_equal(P("x + y"), P("x - y")));
}
