#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

#include "rct/critical.hpp"
#include "rct/divisors.hpp"
#include "rct/parallel.hpp"
#include "rct/parse.hpp"
#include "rct/sturm.hpp"

#include <cstdlib>

using namespace rct;
using rct::testing::Rng;

namespace {

Divisor Dv(int n, const char* s) { return Divisor::make(n, parse_poly(s)); }

}  // namespace

TEST_CASE("Div' membership and normalization") {
  auto [in1, n1] = in_div_prime(Dv(1, "x0^2 - x1^2"));
  CHECK(in1);
  CHECK(n1->normalized);
  CHECK(n1->f == parse_poly("x0^2 - x1^2"));
  auto [in2, n2] = in_div_prime(Dv(2, "x1*x2"));
  CHECK_FALSE(in2);
  CHECK_FALSE(n2.has_value());
  auto [in3, n3] = in_div_prime(Dv(1, "2*x0^2 + x1^2"));
  CHECK(in3);
  CHECK(n3->f == parse_poly("x0^2 + 1/2*x1^2"));
  CHECK_THROWS_AS(Dv(1, "x0^2 + x1"), std::invalid_argument);
  CHECK_THROWS_AS(Dv(1, "x0^2 + x2^2"), std::invalid_argument);
  CHECK_THROWS_AS(Dv(1, "0"), std::invalid_argument);
}

TEST_CASE("scale_divisor") {
  Divisor D = Dv(1, "x0^2 - x1^2");
  CHECK(scale_divisor(D, Rational(3)).f == parse_poly("x0^2 - 9*x1^2"));
  CHECK(scale_divisor(D, Rational(1)).f == D.f);
  CHECK(scale_divisor(D, Rational(0)).f == parse_poly("x0^2"));
  CHECK_THROWS_AS(scale_divisor(Dv(1, "2*x0^2 - x1^2"), Rational(2)), std::invalid_argument);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto vars = divisor_vars(2);
    SparsePoly f = testing::random_homogeneous(rng, vars, 3, 5) + parse_poly("x0^3").aligned(vars);
    auto [ok, N] = in_div_prime(Divisor::make(2, f));
    if (!ok) continue;
    Rational t = testing::random_rational(rng), s = testing::random_rational(rng);
    CHECK(scale_divisor(scale_divisor(*N, t), s).f == scale_divisor(*N, Rational(t * s)).f);
    // f_t(x0, x) = t^d f(x0/t, x) checked pointwise for t != 0.
    if (t != 0) {
      std::vector<Rational> p{testing::random_rational(rng), testing::random_rational(rng), testing::random_rational(rng)};
      std::vector<Rational> q{p[0] / t, p[1], p[2]};
      CHECK(scale_divisor(*N, t).f.evaluate(p) == pow(t, 3) * N->f.evaluate(q));
    }
  }
}

TEST_CASE("family examples") {
  CHECK(paper_family(1, 1).first.f == parse_poly("x0^2 - x1^2"));
  CHECK(paper_family(2, 2).first.f == parse_poly("(x0^2 - (x1^2 + x2^2))*(x0^2 - 2*(x1^2 + x2^2))"));
  CHECK(paper_family(2, 2).first.d == 4);
  CHECK(paper_family(1, 1).second.f == parse_poly("x0*(x0^2 - x1^2)"));
  CHECK(paper_family(3, 2).second.d == 5);
  CHECK(paper_family(3, 2).second.normalized);
}

TEST_CASE("in_E for n = 1 is exact") {
  MembershipReport r = in_E(Dv(1, "x0^2 - 9*x1^2"));
  CHECK(r.verdict == Verdict::member);
  CHECK(r.mode == Mode::exact);
  CHECK(r.critical_route_positive == true);
  // F_2(p) = p1^2 - 4 p2 = 36 x1^2
  auto H = critical_forms(Dv(1, "x0^2 - 9*x1^2"));
  REQUIRE(H.size() == 1);
  CHECK(H[0] == parse_poly("36*x1^2"));

  MembershipReport bad = in_E(Dv(1, "x0^2 + x1^2"));
  CHECK(bad.verdict == Verdict::non_member);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness_count == 0);
  CHECK(bad.critical_route_positive == false);

  // Odd degree with a double root along x1 = 1 direction: x0 (x0 - x1)^2.
  MembershipReport dbl = in_E(Dv(1, "x0*(x0 - x1)^2"));
  CHECK(dbl.verdict == Verdict::non_member);
  CHECK(dbl.witness_count == 2);
  for (int k = 1; k <= 2; ++k) {
    auto [G, H2] = paper_family(1, k);
    CHECK(in_E(G).verdict == Verdict::member);
    CHECK(in_E(H2).verdict == Verdict::member);
    CHECK(in_E(G).critical_route_positive == true);
  }
  CHECK(in_E(Dv(1, "x0 + 5*x1")).verdict == Verdict::member);
  CHECK_THROWS_AS(in_E(Dv(1, "2*x0^2 - x1^2")), std::invalid_argument);
}

TEST_CASE("in_E for n >= 2 gives evidence or an exact refutation") {
  SampleOptions opts;
  opts.keep_certificates = true;
  MembershipReport r = in_E(paper_family(2, 1).first, opts);
  CHECK(r.verdict == Verdict::evidence_only);
  CHECK(r.mode == Mode::sampled);
  CHECK(r.samples == 2000);
  CHECK(r.failed_samples == 0);
  CHECK(r.route_disagreements == 0);
  CHECK(r.route_checked == r.samples);
  for (const auto& c : r.certificates) CHECK(c.count == 2);

  MembershipReport bad = in_E(Dv(2, "x0^2 + x1^2 + x2^2"));
  CHECK(bad.verdict == Verdict::non_member);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(bad.witness_count == 0);
  // The witness is exact: x0^2 + 1 has no real roots.
  CHECK(count_distinct_roots_total(Dv(2, "x0^2 + x1^2 + x2^2").restrict_to(*bad.witness)) == 0);
}

TEST_CASE("sampled counts agree with an independent root oracle") {
  SampleOptions opts;
  opts.samples = 150;
  opts.keep_certificates = true;
  Rng rng(8);
  auto vars = divisor_vars(2);
  for (int i = 0; i < 20; ++i) {
    SparsePoly f = testing::random_homogeneous(rng, vars, 3, 6) + parse_poly("x0^3").aligned(vars);
    auto [ok, N] = in_div_prime(Divisor::make(2, f));
    if (!ok) continue;
    MembershipReport r = in_E(*N, opts);
    CHECK(r.route_disagreements == 0);
    for (const auto& c : r.certificates)
      CHECK(c.count == testing::descartes_distinct_real_roots(N->restrict_to(c.x)));
  }
}

TEST_CASE("sphere directions") {
  auto d2 = sphere_directions(2, 10);
  REQUIRE(d2.size() == 10);
  CHECK(d2[0] == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(d2[1] == std::vector<Rational>{Rational(-1), Rational(0)});
  CHECK(d2[2] == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(sphere_directions(3, 500).size() == 500);
  CHECK(sphere_directions(5, 300).size() == 300);
  CHECK(sphere_directions(1, 10).size() == 2);
  for (const auto& x : sphere_directions(4, 200)) {
    bool nonzero = false;
    for (const auto& v : x) nonzero = nonzero || v != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("sampling is deterministic across thread counts") {
  Divisor D = Dv(2, "x0^3 - 2*x0*x1^2 + x1*x2^2 - 1/3*x2^3");
  SampleOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.keep_certificates = four.keep_certificates = true;
  auto a = in_E(D, one), b = in_E(D, four);
  CHECK(a.verdict == b.verdict);
  CHECK(a.failed_samples == b.failed_samples);
  CHECK(a.witness == b.witness);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) CHECK(a.certificates[i].count == b.certificates[i].count);
  setenv("RCT_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  setenv("RCT_THREADS", "junk", 1);
  CHECK(thread_count() >= 1);
  unsetenv("RCT_THREADS");
}

TEST_CASE("positivity margin") {
  Margin m = positivity_margin(parse_poly("x1^2 + x2^2"), Rational(1), 2);
  CHECK(m.M == 3);
  CHECK(m.epsilon == Rational(1, 6));
  Margin m2 = positivity_margin(parse_poly("x1^2 + x2^2"), Rational(2), 2);
  CHECK(m2.epsilon == 2 * m.epsilon);
  CHECK(positivity_margin(parse_poly("x1^4"), Rational(1), 3).M == 15);
  CHECK_THROWS_AS(positivity_margin(parse_poly("x1^2"), Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(positivity_margin(parse_poly("x1^2 + x1"), Rational(1), 1), std::invalid_argument);
  auto dirs = sphere_directions(2, 400);
  CHECK(sampled_sphere_minimum(parse_poly("x1^2 + x2^2"), 2, dirs) == doctest::Approx(1.0));
  // Perturbations of size eps/2 keep every sample above delta/2.
  Rng rng(3);
  SparsePoly H = parse_poly("x1^2 + x2^2");
  for (int i = 0; i < 50; ++i) {
    SparsePoly Hp = H + m.epsilon / 2 *
                            (testing::random_rational(rng, 1, 1) * parse_poly("x1^2") +
                             testing::random_rational(rng, 1, 1) * parse_poly("x1*x2") +
                             testing::random_rational(rng, 1, 1) * parse_poly("x2^2"));
    CHECK(sampled_sphere_minimum(Hp, 2, dirs) > 0.5);
  }
}

TEST_CASE("openness evidence for family members") {
  auto dirs2 = sphere_directions(2, 400);
  for (int k = 1; k <= 2; ++k) {
    auto [G, H] = paper_family(2, k);
    OpennessReport r = openness_check(G, 30, 11, dirs2);
    CHECK(r.perturbations == 30);
    CHECK(r.preserved == 30);
    for (const auto& e : r.epsilons) CHECK(e > 0);
  }
  auto dirs3 = sphere_directions(3, 200);
  OpennessReport r3 = openness_check(paper_family(3, 1).first, 20, 12, dirs3);
  CHECK(r3.preserved == 20);
  CHECK_THROWS_AS(openness_check(Dv(2, "x0^2 + x1^2 + x2^2"), 1, 1, dirs2), std::domain_error);
}

TEST_CASE("Div'' decision") {
  GCheck g1 = div_double_prime_g(Dv(1, "x0^2 - x1^2"));
  CHECK(g1.g == UniPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)}));
  CHECK(g1.at_one == 0);
  CHECK_FALSE(g1.holds);
  CHECK(in_div_double_prime(Dv(1, "x0^2 - x1^2")).verdict == Verdict::non_member);

  MembershipReport ok = in_div_double_prime(Dv(1, "x0^2 - 1/9*x1^2"));
  CHECK(ok.verdict == Verdict::member);
  CHECK(ok.mode == Mode::exact);
  CHECK(ok.g_check->holds);

  MembershipReport pos = in_div_double_prime(Dv(1, "x0^2 + x1^2"));
  CHECK(pos.g_check->holds);
  CHECK(pos.verdict == Verdict::non_member);

  // Root of g strictly inside (0, 1): g = 1 - 4 t^2.
  GCheck g2 = div_double_prime_g(Dv(1, "x0^2 - 4*x1^2"));
  CHECK(g2.roots_in_open == 1);
  CHECK_FALSE(g2.holds);
  // Only the x0, x1 terms enter g.
  GCheck g3 = div_double_prime_g(Dv(2, "x0^2 - 1/4*x1^2 - 5*x2^2"));
  CHECK(g3.g == UniPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1, 4)}));
  CHECK(g3.holds);
}
