#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

#include "rct/parse.hpp"
#include "rct/sturm.hpp"

using namespace rct;
using rct::testing::Rng;

namespace {

UniPoly U(const char* s) {
  auto p = parse_poly(s);
  return UniPoly::from_sparse(p, "x");
}

Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Random polynomial that sometimes carries repeated rational roots.
UniPoly random_test_poly(Rng& rng) {
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<int> coin(0, 3);
  if (coin(rng) != 0) return testing::random_unipoly(rng, deg(rng));
  UniPoly f(std::vector<Rational>{testing::random_nonzero_rational(rng)});
  int target = deg(rng);
  while (f.degree() < target) {
    auto r = testing::random_rational(rng, 4, 3);
    int mult = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < mult && f.degree() < target; ++k) f = f * UniPoly({-r, Rational(1)});
  }
  return f;
}

}  // namespace

TEST_CASE("Sturm sequence examples") {
  auto s1 = sturm_sequence(U("x^2-1"));
  REQUIRE(s1.polys.size() == 3);
  CHECK(s1.polys[1] == U("2*x"));
  CHECK(s1.polys[2] == U("1"));

  auto s2 = sturm_sequence(U("x^2+1"));
  REQUIRE(s2.polys.size() == 3);
  CHECK(s2.polys[2] == U("-1"));

  auto s3 = sturm_sequence(U("x^2"));
  REQUIRE(s3.polys.size() == 2);
  CHECK(s3.polys[1] == U("2*x"));

  CHECK_THROWS_AS(sturm_sequence(U("5")), std::invalid_argument);
}

TEST_CASE("Sturm chain invariant f_{i-1} = q_i f_i - f_{i+1}") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_test_poly(rng);
    auto seq = sturm_sequence(f);
    CHECK(seq.polys[0] == f);
    CHECK(seq.polys[1] == f.derivative());
    for (std::size_t k = 1; k + 1 < seq.polys.size(); ++k) {
      auto [q, r] = divmod(seq.polys[k - 1], seq.polys[k]);
      CHECK(seq.polys[k + 1] == -r);
      CHECK(seq.polys[k + 1].degree() < seq.polys[k].degree());
    }
    CHECK_FALSE(seq.polys.back().is_zero());
    CHECK(divmod(seq.polys[seq.polys.size() - 2], seq.polys.back()).second.is_zero());
  }
}

TEST_CASE("sign changes") {
  CHECK(sign_changes(std::vector<int>{1, 0, -2, 3}) == 2);
  CHECK(sign_changes(std::vector<int>{1, 1, 1}) == 0);
  CHECK(sign_changes(std::vector<int>{-1, 1, -1}) == 2);
  CHECK(sign_changes(std::vector<int>{}) == 0);
}

TEST_CASE("interval counts") {
  CHECK(count_distinct_roots_in(U("x^2-1"), Q(-2), Q(2)) == 2);
  CHECK(count_distinct_roots_in(U("x^2+1"), Q(-10), Q(10)) == 0);
  // (x-1)^2 (x+1): oracle is the squarefree Descartes count.
  auto f = U("(x-1)^2*(x+1)");
  CHECK(count_distinct_roots_in(f, Q(-2), Q(2)) == 2);
  CHECK(testing::descartes_distinct_real_roots(f) == 2);
  CHECK(count_distinct_roots_in(f, Q(0), Q(2)) == 1);
  CHECK_THROWS_AS(count_distinct_roots_in(U("x^2-1"), Q(1), Q(2)), EndpointRootError);
  CHECK_THROWS_AS(count_distinct_roots_in(U("x^2-1"), Q(2), Q(1)), std::invalid_argument);
}

TEST_CASE("endpoint nudging keeps exactly the closed-interval roots") {
  auto f = U("x^3-x");
  auto [a, b] = nudge_endpoints(f, Q(0), Q(1));
  CHECK(a < 0);
  CHECK(b > 1);
  CHECK(count_distinct_roots_in(f, a, b) == 2);
  auto [c, d] = nudge_endpoints(f, Q(1, 2), Q(1));
  CHECK(c == Q(1, 2));
  CHECK(count_distinct_roots_in(f, c, d) == 1);
  auto [e, g] = nudge_endpoints(f, Q(-1), Q(-1));
  CHECK(count_distinct_roots_in(f, e, g) == 1);
}

TEST_CASE("total counts") {
  CHECK(count_distinct_roots_total(U("x^3-x")) == 3);
  CHECK(count_distinct_roots_total(U("x^4+1")) == 0);
  CHECK(count_distinct_roots_total(U("(x-2)^4")) == 1);
  CHECK(count_distinct_roots_total(U("7")) == 0);
}

TEST_CASE("isolation examples") {
  auto roots = isolate_roots_bisection(U("x^2-2"), Q(1, 1024));
  REQUIRE(roots.size() == 2);
  auto f = U("x^2-2");
  for (const auto& iv : roots) {
    CHECK(iv.hi - iv.lo <= Q(1, 1024));
    CHECK(f(iv.lo) * f(iv.hi) < 0);
  }
  CHECK(roots[0].hi < 0);
  CHECK(roots[1].lo > 0);

  CHECK(isolate_roots_bisection(U("x^2+1"), Q(1, 4)).empty());

  auto cubic = isolate_roots_bisection(U("x^3-x"), Q(1, 4));
  REQUIRE(cubic.size() == 3);
  const Rational expected[] = {Q(-1), Q(0), Q(1)};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(cubic[k].lo <= expected[k]);
    CHECK(cubic[k].hi >= expected[k]);
  }
}

TEST_CASE("total count agrees with isolation and with the Descartes oracle") {
  Rng rng(1234);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_test_poly(rng);
    int total = count_distinct_roots_total(f);
    auto intervals = isolate_roots_bisection(f, Q(1, 1 << 20));
    REQUIRE(static_cast<int>(intervals.size()) == total);
    CHECK(testing::descartes_distinct_real_roots(f) == total);
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      const auto& iv = intervals[k];
      CHECK(iv.hi - iv.lo <= Q(1, 1 << 20));
      if (k > 0) CHECK(intervals[k - 1].hi <= iv.lo);
      if (iv.exact()) {
        CHECK(f(iv.lo) == 0);
      } else {
        // Sign-change count drops by exactly one across each isolating interval.
        auto seq = sturm_sequence(f);
        CHECK(seq.sign_changes_at(iv.lo) - seq.sign_changes_at(iv.hi) == 1);
      }
    }
  }
}

TEST_CASE("interval counts are additive") {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    auto f = random_test_poly(rng);
    auto a = testing::random_rational(rng, 20, 3);
    Rational b = a + abs(testing::random_rational(rng, 10, 7)) + Q(1, 5);
    Rational c = b + abs(testing::random_rational(rng, 10, 3)) + Q(1, 7);
    if (f(a) == 0 || f(b) == 0 || f(c) == 0) continue;
    CHECK(count_distinct_roots_in(f, a, c) == count_distinct_roots_in(f, a, b) + count_distinct_roots_in(f, b, c));
  }
}
