#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

#include "rct/critical.hpp"
#include "rct/parse.hpp"
#include "rct/sturm.hpp"

#include <set>
#include <thread>

using namespace rct;
using rct::testing::Rng;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

std::vector<Rational> Qs(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Coefficients a1..ad of a monic polynomial; about half come from distinct
// rational roots so that both verdicts show up often.
std::vector<Rational> random_coefficients(Rng& rng, int d) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    std::vector<Rational> a(static_cast<std::size_t>(d));
    for (auto& v : a) v = testing::random_rational(rng);
    return a;
  }
  UniPoly f(std::vector<Rational>{Rational(1)});
  std::set<Rational> roots;
  while (static_cast<int>(roots.size()) < d) roots.insert(testing::random_rational(rng, 9, 3));
  for (const auto& r : roots) f = f * UniPoly(std::vector<Rational>{Rational(-r), Rational(1)});
  // Nudge the constant term now and then to leave the root-product locus.
  std::vector<Rational> c = f.coeffs();
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) c[0] += testing::random_rational(rng, 3, 4);
  std::vector<Rational> a;
  for (int k = d - 1; k >= 0; --k) a.push_back(c[static_cast<std::size_t>(k)]);
  return a;
}

}  // namespace

TEST_CASE("d = 2 by hand") {
  const SymbolicSturm& s = symbolic_sturm(2);
  CHECK(s.length() == 3);
  // f2 = -rem(f0, f1) = (a1^2 - 4 a2) / 4
  SubstRationalFn expected = SubstRationalFn::make(P("a1^2 - 4*a2"), SparsePoly::constant(4));
  CHECK(equivalent(s.coefficient(2, 0), expected));
  const CriticalSet& cs = critical_polynomials(2);
  REQUIRE(cs.F.size() == 1);
  CHECK(cs.at(2) == P("a1^2 - 4*a2"));
  CHECK(cs.scale[0] == Rational(1, 4));
  CHECK(cs.w[0].empty());
}

TEST_CASE("d = 3 gives the cubic discriminant") {
  const SymbolicSturm& s = symbolic_sturm(3);
  CHECK(s.length() == 4);
  const CriticalSet& cs = critical_polynomials(3);
  SparsePoly disc = P("a1^2*a2^2 - 4*a2^3 - 4*a1^3*a3 - 27*a3^2 + 18*a1*a2*a3");
  CHECK(cs.at(3) == disc);
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_coefficients(rng, 3);
    Rational D = disc.evaluate(a);
    RootVerdict v = has_d_distinct_real_roots(a);
    if (D == 0 || cs.at(2).evaluate(a) == 0) continue;
    CHECK((v == RootVerdict::yes) == (D > 0 && cs.at(2).evaluate(a) > 0));
    // A positive discriminant alone already forces three real roots.
    CHECK((v == RootVerdict::yes) == (D > 0));
  }
}

TEST_CASE("has_d_distinct_real_roots examples") {
  CHECK(has_d_distinct_real_roots(Qs({0, -1})) == RootVerdict::yes);
  CHECK(has_d_distinct_real_roots(Qs({0, 1})) == RootVerdict::no);
  CHECK(has_d_distinct_real_roots(Qs({2, 1})) == RootVerdict::degenerate);
  CHECK(count_distinct_roots_total(monic_from_coefficients(Qs({2, 1}))) == 1);
  CHECK(has_d_distinct_real_roots(Qs({5})) == RootVerdict::yes);
  CHECK(in_S_n(Qs({0, -1})));
  CHECK_FALSE(in_S_n(Qs({0, 0})));
  CHECK_FALSE(in_S_n(Qs({2, 1})));
  // x^3 - x
  CHECK(in_S_n(Qs({0, -1, 0})));
}

TEST_CASE("degree range") {
  CHECK_THROWS_AS(symbolic_sturm(1), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_sturm(9), std::invalid_argument);
  CHECK_THROWS_AS(critical_polynomials(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(has_d_distinct_real_roots(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("pair chain and homogeneity for d <= 7") {
  for (int d = 2; d <= 7; ++d) {
    CAPTURE(d);
    const SymbolicSturm& s = symbolic_sturm(d);
    REQUIRE(s.length() == static_cast<std::size_t>(d) + 1);
    for (std::size_t j = 0; j + 1 < s.length(); ++j) {
      CAPTURE(j);
      CHECK(s.representative(j).size() == static_cast<std::size_t>(d) + 1 - j);
      CHECK(s.pair_constant(j).has_value());
    }
    const CriticalSet& cs = critical_polynomials(d);
    for (const auto& F : cs.F) CHECK(is_substitutable_homogeneous(F));
    for (const auto& c : cs.scale) CHECK(c > 0);
  }
}

TEST_CASE("materialized pairs agree with the factored shd data") {
  for (int d = 2; d <= 5; ++d) {
    const SymbolicSturm& s = symbolic_sturm(d);
    for (std::size_t j = 0; j + 1 < s.length(); ++j) {
      SubstitutablePair pr = s.pair(j);
      CHECK(is_substitutable_pair(pr));
      for (std::size_t k = 0; k < pr.A.size(); ++k) CHECK(pr.A[k].shd == s.coefficient_shd(j, k));
    }
  }
}

TEST_CASE("leading coefficient equals scale * F / w^2") {
  for (int d = 2; d <= 5; ++d) {
    CAPTURE(d);
    const SymbolicSturm& s = symbolic_sturm(d);
    const CriticalSet& cs = critical_polynomials(d);
    for (int j = 2; j <= d; ++j) {
      CAPTURE(j);
      SubstRationalFn w = cs.w_function(j);
      auto idx = static_cast<std::size_t>(j - 2);
      SubstRationalFn rhs = SubstRationalFn::make(cs.scale[idx] * cs.at(j) * w.den * w.den, w.num * w.num);
      CHECK(equivalent(s.leading_coefficient(static_cast<std::size_t>(j)), rhs));
    }
  }
}

TEST_CASE("leading coefficient identity at points, d = 6, 7") {
  Rng rng(61);
  for (int d = 6; d <= 7; ++d) {
    const SymbolicSturm& s = symbolic_sturm(d);
    const CriticalSet& cs = critical_polynomials(d);
    int done = 0;
    while (done < 30) {
      auto a = random_coefficients(rng, d);
      auto sp = s.specialize(a);
      if (!sp) continue;
      for (int j = 2; j <= d; ++j) {
        SubstRationalFn w = cs.w_function(j);
        Rational wv = w.evaluate(a);
        Rational rhs = cs.scale[static_cast<std::size_t>(j - 2)] * cs.at(j).evaluate(a) / (wv * wv);
        CHECK((*sp)[static_cast<std::size_t>(j)].leading_coefficient() == rhs);
      }
      ++done;
    }
  }
}

TEST_CASE("predicate equivalence against a Descartes oracle, d = 3..6") {
  Rng rng(4242);
  for (int d = 3; d <= 6; ++d) {
    CAPTURE(d);
    int checked = 0, yes = 0, disagreements = 0;
    while (checked < 1000) {
      auto a = random_coefficients(rng, d);
      RootVerdict v = has_d_distinct_real_roots(a);
      if (v == RootVerdict::degenerate) continue;
      bool oracle = testing::descartes_distinct_real_roots(monic_from_coefficients(a)) == d;
      if ((v == RootVerdict::yes) != oracle) ++disagreements;
      if (oracle) ++yes;
      ++checked;
    }
    CHECK(disagreements == 0);
    CHECK(yes > 100);
    CHECK(yes < 900);
  }
}

TEST_CASE("in_S_n agrees with a direct count, including degenerate points") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto a = random_coefficients(rng, 3);
    CHECK(in_S_n(a) == (testing::descartes_distinct_real_roots(monic_from_coefficients(a)) == 3));
  }
  // (x-1)^2 (x+2) has a double root; F_3 vanishes.
  auto a = Qs({0, -3, 2});
  CHECK(has_d_distinct_real_roots(a) == RootVerdict::degenerate);
  CHECK_FALSE(in_S_n(a));
  // Beyond the table: direct Sturm.
  CHECK(in_S_n(Qs({0, -1}), 1));
}

TEST_CASE("specialization matches the numeric Sturm sequence") {
  Rng rng(99);
  for (int d = 2; d <= 6; ++d) {
    const SymbolicSturm& s = symbolic_sturm(d);
    int done = 0;
    for (int i = 0; i < 200 && done < 40; ++i) {
      auto a = random_coefficients(rng, d);
      auto sp = s.specialize(a);
      if (!sp) continue;
      SturmSeq seq = sturm_sequence(monic_from_coefficients(a));
      CHECK(seq.polys == *sp);
      ++done;
    }
    CHECK(done > 20);
  }
}

TEST_CASE("scaling covariance of F_j") {
  Rng rng(5);
  for (int d = 2; d <= 6; ++d) {
    const CriticalSet& cs = critical_polynomials(d);
    for (int i = 0; i < 20; ++i) {
      std::vector<Rational> a(static_cast<std::size_t>(d)), ta(a.size());
      Rational t = abs(testing::random_nonzero_rational(rng));
      for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = testing::random_rational(rng);
        ta[k] = pow(t, static_cast<unsigned>(k + 1)) * a[k];
      }
      for (const auto& F : cs.F) {
        int w = *substituted_degree(F).value();
        CHECK(F.evaluate(ta) == pow(t, static_cast<unsigned>(w)) * F.evaluate(a));
      }
      CHECK(has_d_distinct_real_roots(a) == has_d_distinct_real_roots(ta));
    }
  }
}

TEST_CASE("shd of a rational function does not depend on the representation") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    SparsePoly num = testing::random_substitutable(rng, 4, 1 + i % 6, 3);
    SparsePoly den = testing::random_substitutable(rng, 4, i % 4, 2);
    if (den.is_zero() || num.is_zero()) continue;
    SparsePoly g = testing::random_substitutable(rng, 4, i % 5, 2);
    if (g.is_zero()) continue;
    SubstRationalFn f = SubstRationalFn::make(num, den);
    SubstRationalFn h = SubstRationalFn::make(num * g, den * g);
    CHECK(f.shd == h.shd);
    CHECK(equivalent(f, h));
  }
  CHECK_THROWS_AS(SubstRationalFn::make(P("a1 + a1^2"), P("1")), std::invalid_argument);
  CHECK_THROWS_AS(SubstRationalFn::make(P("a1"), SparsePoly()), std::invalid_argument);
  CHECK(SubstRationalFn::make(SparsePoly(), P("a2")).shd.is_any());
}

TEST_CASE("substitutable pair conditions") {
  std::vector<ShdValue> p{ShdValue::of(0), ShdValue::of(1), ShdValue::of(2)};
  std::vector<ShdValue> q{ShdValue::of(3), ShdValue::any()};
  CHECK(substitutable_pair_constant(p, q) == 3);
  q[1] = ShdValue::of(5);
  CHECK_FALSE(substitutable_pair_constant(p, q).has_value());
  p[1] = ShdValue::of(2);
  q[1] = ShdValue::of(4);
  CHECK_FALSE(substitutable_pair_constant(p, q).has_value());
  std::vector<ShdValue> short_q{ShdValue::of(1)};
  CHECK_FALSE(substitutable_pair_constant(p, short_q).has_value());
}

TEST_CASE("memo table under concurrent first use") {
  std::vector<const CriticalSet*> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i)
    threads.emplace_back([&seen, i] { seen[i] = &critical_polynomials(5); });
  for (auto& t : threads) t.join();
  for (auto* p : seen) CHECK(p == seen[0]);
}
