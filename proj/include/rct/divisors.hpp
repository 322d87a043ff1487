#pragma once

#include "rct/sparse_poly.hpp"
#include "rct/univariate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rct {

/// x0 .. xn
std::vector<std::string> divisor_vars(int n);

/// Hypersurface {f = 0} in P^n, f homogeneous of degree d in x0..xn.
struct Divisor {
  int n = 0;
  int d = 0;
  SparsePoly f;
  /// Coefficient of x0^d equals 1.
  bool normalized = false;

  /// Infers d; throws std::invalid_argument for zero, inhomogeneous, or
  /// foreign-variable input.
  static Divisor make(int n, SparsePoly f);
  Rational leading_x0_coefficient() const;
  /// p_i(x1..xn): coefficient of x0^{d-i}, a form of degree i.
  std::vector<SparsePoly> coefficient_forms() const;
  /// f(x0, x) as a polynomial in x0 for fixed x = (x1..xn).
  UniPoly restrict_to(const std::vector<Rational>& x) const;
};

/// Membership in Div' and the normalized representative when it holds.
std::pair<bool, std::optional<Divisor>> in_div_prime(const Divisor& D);

/// f_t = t^d f(x0/t, x1, ..., xn); t = 0 gives x0^d. Throws
/// std::invalid_argument unless D is normalized.
Divisor scale_divisor(const Divisor& D, const Rational& t);

/// G = prod_{j=1..k} (x0^2 - j (x1^2 + ... + xn^2)) and x0 * G.
std::pair<Divisor, Divisor> paper_family(int n, int k);

enum class MemberSet { DivPrime, E, DivDoublePrime };
enum class Verdict { member, non_member, evidence_only };
enum class Mode { exact, sampled };
std::string to_string(MemberSet s);
std::string to_string(Verdict v);
std::string to_string(Mode m);

struct SampleCertificate {
  std::vector<Rational> x;
  int count = 0;  // distinct real roots of f(., x)
};

/// g(t) = f_t(1, 1, 0, ..., 0) and what Sturm says about it on (0, 1].
struct GCheck {
  UniPoly g;
  Rational at_one;
  int roots_in_open = 0;  // on (0, 1)
  bool holds = false;
};

struct MembershipReport {
  MemberSet set = MemberSet::E;
  Verdict verdict = Verdict::evidence_only;
  Mode mode = Mode::sampled;
  /// Point x where f(., x) has fewer than d distinct real roots.
  std::optional<std::vector<Rational>> witness;
  std::optional<int> witness_count;
  int samples = 0;
  int failed_samples = 0;
  /// Critical-polynomial route: samples where it gave a verdict, and how
  /// often that verdict disagreed with the direct Sturm count.
  int route_checked = 0;
  int route_disagreements = 0;
  /// n = 1 only: every F_j(p) is a positive form.
  std::optional<bool> critical_route_positive;
  std::optional<GCheck> g_check;
  std::vector<SampleCertificate> certificates;
};

struct SampleOptions {
  /// 0 selects the default for n (2000 for n = 2, 20000 for n >= 3).
  int samples = 0;
  /// 0 selects thread_count().
  int threads = 0;
  bool keep_certificates = false;
};

int default_sample_count(int n);

/// Deterministic integer direction vectors in R^n \ {0}: the axis
/// directions +-e_i first, then a circle lattice (n = 2), a Fibonacci sphere
/// (n = 3) or a Kronecker sequence (n >= 4), scaled by 2^10 and rounded.
std::vector<std::vector<Rational>> sphere_directions(int n, int count);

/// Requires a normalized divisor. n = 1 is decided exactly; n >= 2 samples.
MembershipReport in_E(const Divisor& D, const SampleOptions& opts = {});

/// g(t) and the exact (0, 1] check.
GCheck div_double_prime_g(const Divisor& D);

/// g-condition combined with in_E.
MembershipReport in_div_double_prime(const Divisor& D, const SampleOptions& opts = {});

/// H_j = F_j(p_1, ..., p_d) for j = 2..d, as forms in x1..xn.
std::vector<SparsePoly> critical_forms(const Divisor& D);

/// Smallest value of H(x) / |x|^k over the directions (k = deg H).
double sampled_sphere_minimum(const SparsePoly& H, int n, const std::vector<std::vector<Rational>>& dirs);

struct Margin {
  Rational epsilon;
  Integer M;
  int n = 0;
  int k = 0;
};

/// eps = delta / (2M), M = C(n+k-1, k), for H homogeneous of degree k in
/// x1..xn. Throws std::invalid_argument if delta <= 0 or H is not a form.
Margin positivity_margin(const SparsePoly& H, const Rational& delta, int n);

struct OpennessReport {
  int perturbations = 0;
  int preserved = 0;
  std::vector<Rational> epsilons;  // per H_j
};

/// Perturbs every coefficient of every H_j by less than its margin (delta =
/// 99/100 of the sampled minimum, rounded down) and checks
/// H'(x) > delta/2 |x|^k exactly on the directions.
OpennessReport openness_check(const Divisor& D, int perturbations, std::uint64_t seed,
                              const std::vector<std::vector<Rational>>& dirs);

}  // namespace rct
