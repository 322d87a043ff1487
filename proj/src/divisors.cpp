#include "rct/divisors.hpp"

#include "rct/critical.hpp"
#include "rct/parallel.hpp"
#include "rct/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rct {

std::vector<std::string> divisor_vars(int n) {
  std::vector<std::string> vars;
  for (int i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

Divisor Divisor::make(int n, SparsePoly f) {
  if (n < 1) throw std::invalid_argument("divisor needs n >= 1");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial is not a divisor");
  auto vars = divisor_vars(n);
  SparsePoly g = f.trimmed();
  for (const auto& v : g.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw std::invalid_argument("unexpected variable '" + v + "' in a divisor on P^" + std::to_string(n));
  g = g.aligned(vars);
  auto deg = g.homogeneous_degree();
  if (!deg || *deg < 1) throw std::invalid_argument("divisor polynomial must be homogeneous of positive degree");
  Divisor D;
  D.n = n;
  D.d = *deg;
  D.f = std::move(g);
  D.normalized = D.leading_x0_coefficient() == 1;
  return D;
}

Rational Divisor::leading_x0_coefficient() const {
  Monomial m(static_cast<std::size_t>(n) + 1, 0);
  m[0] = static_cast<Exponent>(d);
  return f.coefficient(m);
}

std::vector<SparsePoly> Divisor::coefficient_forms() const {
  auto by_power = f.coefficients_in("x0");
  auto rest = divisor_vars(n);
  rest.erase(rest.begin());
  std::vector<SparsePoly> p(static_cast<std::size_t>(d) + 1, SparsePoly(rest));
  for (std::size_t k = 0; k < by_power.size(); ++k) p[static_cast<std::size_t>(d) - k] = by_power[k].aligned(rest);
  return p;
}

UniPoly Divisor::restrict_to(const std::vector<Rational>& x) const {
  if (x.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("point has the wrong dimension");
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  Rational v;
  for (const auto& t : f.terms()) {
    v = t.coeff;
    for (std::size_t i = 1; i < t.exp.size(); ++i)
      if (t.exp[i] != 0) v *= pow(x[i - 1], t.exp[i]);
    c[t.exp[0]] += v;
  }
  return UniPoly(std::move(c));
}

std::pair<bool, std::optional<Divisor>> in_div_prime(const Divisor& D) {
  Rational c = D.leading_x0_coefficient();
  if (c == 0) return {false, std::nullopt};
  Rational inv = 1 / c;
  return {true, Divisor::make(D.n, inv * D.f)};
}

Divisor scale_divisor(const Divisor& D, const Rational& t) {
  if (!D.normalized) throw std::invalid_argument("scale_divisor needs a normalized divisor");
  std::vector<Term> terms;
  for (const auto& term : D.f.terms()) {
    Rational c = term.coeff * pow(t, static_cast<unsigned>(D.d) - term.exp[0]);
    if (c != 0) terms.push_back(Term{term.exp, c});
  }
  return Divisor::make(D.n, SparsePoly(D.f.vars(), std::move(terms)));
}

std::pair<Divisor, Divisor> paper_family(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("paper_family needs n >= 1 and k >= 1");
  auto vars = divisor_vars(n);
  SparsePoly x0 = SparsePoly::variable("x0").aligned(vars);
  SparsePoly s(vars);
  for (int i = 1; i <= n; ++i) s += SparsePoly::variable(vars[static_cast<std::size_t>(i)]).aligned(vars).pow(2);
  SparsePoly G = SparsePoly::constant(1, vars);
  for (int j = 1; j <= k; ++j) G *= x0 * x0 - Rational(j) * s;
  return {Divisor::make(n, G), Divisor::make(n, x0 * G)};
}

std::string to_string(MemberSet s) {
  switch (s) {
    case MemberSet::DivPrime: return "DivPrime";
    case MemberSet::E: return "E";
    case MemberSet::DivDoublePrime: return "DivDoublePrime";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::non_member: return "non_member";
    case Verdict::evidence_only: return "evidence_only";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "sampled"; }

int default_sample_count(int n) { return n <= 2 ? 2000 : 20000; }

std::vector<std::vector<Rational>> sphere_directions(int n, int count) {
  if (n < 1) throw std::invalid_argument("sphere_directions needs n >= 1");
  std::vector<std::vector<Rational>> out;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un && static_cast<int>(out.size()) < count; ++i)
    for (int s : {1, -1}) {
      if (static_cast<int>(out.size()) >= count) break;
      std::vector<Rational> e(un, Rational(0));
      e[i] = s;
      out.push_back(std::move(e));
    }
  if (n == 1) return out;
  const int M = std::max(count - static_cast<int>(out.size()), 0);
  std::vector<double> alpha;
  if (n >= 4) {
    const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    for (int i = 0; i < n; ++i) {
      double r = std::sqrt(static_cast<double>(primes[i % 16] + 16 * (i / 16)));
      alpha.push_back(r - std::floor(r));
    }
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (long k = 0; static_cast<int>(out.size()) < count; ++k) {
    std::vector<double> v(un);
    if (n == 2) {
      double theta = 2 * std::numbers::pi * (static_cast<double>(k) + 0.5) / M;
      v = {std::cos(theta), std::sin(theta)};
    } else if (n == 3) {
      double z = 1 - 2 * (static_cast<double>(k % M) + 0.5) / M;
      double r = std::sqrt(std::max(0.0, 1 - z * z));
      double phi = golden * static_cast<double>(k);
      v = {r * std::cos(phi), r * std::sin(phi), z};
    } else {
      for (std::size_t i = 0; i < un; ++i) {
        double u = static_cast<double>(k + 1) * alpha[i];
        v[i] = 2 * (u - std::floor(u)) - 1;
      }
    }
    std::vector<Rational> x(un);
    bool zero = true;
    for (std::size_t i = 0; i < un; ++i) {
      x[i] = static_cast<long>(std::lround(v[i] * 1024));
      zero = zero && x[i] == 0;
    }
    if (!zero) out.push_back(std::move(x));
  }
  return out;
}

namespace {

struct SampleResult {
  int count = 0;
  std::optional<RootVerdict> route;
};

SampleResult evaluate_sample(const Divisor& D, const std::vector<Rational>& x) {
  SampleResult r;
  UniPoly f = D.restrict_to(x);
  r.count = count_distinct_roots_total(f);
  if (D.d >= 2 && D.d <= kDefaultMaxDegree) {
    // f is monic of degree d; a_i is the coefficient of x0^{d-i}.
    std::vector<Rational> a;
    for (int i = 1; i <= D.d; ++i) a.push_back(f.coeffs()[static_cast<std::size_t>(D.d - i)]);
    r.route = has_d_distinct_real_roots(a);
  }
  return r;
}

void tally(MembershipReport& rep, const Divisor& D, const std::vector<Rational>& x, const SampleResult& r,
           bool keep) {
  ++rep.samples;
  if (r.count != D.d) {
    ++rep.failed_samples;
    if (!rep.witness) {
      rep.witness = x;
      rep.witness_count = r.count;
    }
  }
  if (r.route && *r.route != RootVerdict::degenerate) {
    ++rep.route_checked;
    if ((*r.route == RootVerdict::yes) != (r.count == D.d)) ++rep.route_disagreements;
  }
  if (keep) rep.certificates.push_back(SampleCertificate{x, r.count});
}

bool positive_univariate_form(const SparsePoly& H) {
  // A nonzero form c * x1^k in one variable.
  if (H.size() != 1) return false;
  const Term& t = H.terms().front();
  Exponent k = 0;
  for (auto e : t.exp) k += e;
  return t.coeff > 0 && k % 2 == 0;
}

}  // namespace

MembershipReport in_E(const Divisor& D, const SampleOptions& opts) {
  if (!D.normalized) throw std::invalid_argument("in_E needs a normalized divisor");
  MembershipReport rep;
  rep.set = MemberSet::E;
  if (D.d == 1) {
    // x0 + (linear form) always has exactly one root.
    rep.verdict = Verdict::member;
    rep.mode = Mode::exact;
    return rep;
  }
  if (D.n == 1) {
    // f(x0, s x1) = s^d f(x0 / s, x1): the directions +1 and -1 decide.
    rep.mode = Mode::exact;
    for (int s : {1, -1}) {
      std::vector<Rational> x{Rational(s)};
      tally(rep, D, x, evaluate_sample(D, x), true);
    }
    rep.verdict = rep.failed_samples == 0 ? Verdict::member : Verdict::non_member;
    if (D.d <= kDefaultMaxDegree) {
      bool positive = true;
      for (const auto& H : critical_forms(D)) positive = positive && positive_univariate_form(H);
      rep.critical_route_positive = positive;
    }
    return rep;
  }
  const int count = opts.samples > 0 ? opts.samples : default_sample_count(D.n);
  auto dirs = sphere_directions(D.n, count);
  std::vector<SampleResult> results(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t i) { results[i] = evaluate_sample(D, dirs[i]); }, opts.threads);
  rep.mode = Mode::sampled;
  for (std::size_t i = 0; i < dirs.size(); ++i) tally(rep, D, dirs[i], results[i], opts.keep_certificates);
  rep.verdict = rep.failed_samples == 0 ? Verdict::evidence_only : Verdict::non_member;
  return rep;
}

GCheck div_double_prime_g(const Divisor& D) {
  if (!D.normalized) throw std::invalid_argument("Div'' check needs a normalized divisor");
  std::vector<Rational> c(static_cast<std::size_t>(D.d) + 1);
  for (const auto& t : D.f.terms()) {
    bool only_first_two = true;
    for (std::size_t i = 2; i < t.exp.size(); ++i) only_first_two = only_first_two && t.exp[i] == 0;
    if (only_first_two) c[t.exp[1]] += t.coeff;
  }
  GCheck gc;
  gc.g = UniPoly(std::move(c));
  gc.at_one = gc.g(Rational(1));
  if (gc.at_one == 0) return gc;
  // g(0) = 1, so neither endpoint of (0, 1) is a root.
  gc.roots_in_open = gc.g.degree() >= 1 ? count_distinct_roots_in(gc.g, Rational(0), Rational(1)) : 0;
  gc.holds = gc.roots_in_open == 0;
  return gc;
}

MembershipReport in_div_double_prime(const Divisor& D, const SampleOptions& opts) {
  GCheck gc = div_double_prime_g(D);
  MembershipReport rep = in_E(D, opts);
  rep.set = MemberSet::DivDoublePrime;
  rep.g_check = gc;
  if (!gc.holds) {
    rep.verdict = Verdict::non_member;
    rep.mode = Mode::exact;
  }
  return rep;
}

std::vector<SparsePoly> critical_forms(const Divisor& D) {
  const CriticalSet& cs = critical_polynomials(D.d);
  auto p = D.coefficient_forms();
  std::vector<SparsePoly> g(p.begin() + 1, p.end());
  std::vector<SparsePoly> out;
  for (const auto& F : cs.F) out.push_back(substitute_graded(F, g));
  return out;
}

namespace {

std::vector<std::string> form_vars(int n) {
  auto vars = divisor_vars(n);
  vars.erase(vars.begin());
  return vars;
}

Rational squared_norm(const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& v : x) s += v * v;
  return s;
}

}  // namespace

double sampled_sphere_minimum(const SparsePoly& H, int n, const std::vector<std::vector<Rational>>& dirs) {
  auto k = H.homogeneous_degree();
  if (!k) throw std::invalid_argument("sphere minimum needs a nonzero form");
  SparsePoly h = H.aligned(form_vars(n));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : dirs) {
    Rational s = squared_norm(x);
    Rational v = h.evaluate(x) / pow(s, static_cast<unsigned>(*k / 2));
    double value = to_double(v);
    if (*k % 2 != 0) value /= std::sqrt(to_double(s));
    best = std::min(best, value);
  }
  return best;
}

Margin positivity_margin(const SparsePoly& H, const Rational& delta, int n) {
  if (delta <= 0) throw std::invalid_argument("positivity margin needs delta > 0");
  auto k = H.homogeneous_degree();
  if (!k) throw std::invalid_argument("positivity margin needs a nonzero form");
  Margin m;
  m.n = n;
  m.k = *k;
  m.M = binomial(static_cast<unsigned long>(n + *k - 1), static_cast<unsigned long>(*k));
  m.epsilon = delta / (2 * Rational(m.M));
  return m;
}

namespace {

void monomials_of_degree(int n, int k, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    cur[pos] = static_cast<Exponent>(k);
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[pos] = static_cast<Exponent>(e);
    monomials_of_degree(n, k - e, cur, pos + 1, out);
  }
}

}  // namespace

OpennessReport openness_check(const Divisor& D, int perturbations, std::uint64_t seed,
                              const std::vector<std::vector<Rational>>& dirs) {
  auto vars = form_vars(D.n);
  struct Piece {
    SparsePoly H;
    int k;
    Rational half_delta;
    Rational epsilon;
    std::vector<Monomial> monomials;
  };
  std::vector<Piece> pieces;
  OpennessReport rep;
  for (const auto& H : critical_forms(D)) {
    double min = sampled_sphere_minimum(H, D.n, dirs);
    if (!(min > 0)) throw std::domain_error("critical form is not positive on the sample directions");
    Rational delta = fraction(static_cast<long>(std::floor(0.99 * min * 1048576)), 1048576);
    if (delta <= 0) delta = from_double(0.99 * min);
    Margin m = positivity_margin(H, delta, D.n);
    if (m.k % 2 != 0) throw std::logic_error("critical form of odd degree");
    Piece p{H.aligned(vars), m.k, Rational(delta / 2), m.epsilon, {}};
    Monomial cur(vars.size(), 0);
    monomials_of_degree(D.n, m.k, cur, 0, p.monomials);
    rep.epsilons.push_back(m.epsilon);
    pieces.push_back(std::move(p));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> unit(-999, 999);
  for (int t = 0; t < perturbations; ++t) {
    bool preserved = true;
    for (const auto& p : pieces) {
      std::vector<Term> noise;
      for (const auto& mono : p.monomials) noise.push_back(Term{mono, p.epsilon * fraction(unit(rng), 1000)});
      SparsePoly Hp = p.H + SparsePoly(vars, std::move(noise));
      for (const auto& x : dirs) {
        Rational bound = p.half_delta * pow(squared_norm(x), static_cast<unsigned>(p.k / 2));
        if (!(Hp.evaluate(x) > bound)) {
          preserved = false;
          break;
        }
      }
      if (!preserved) break;
    }
    ++rep.perturbations;
    if (preserved) ++rep.preserved;
  }
  return rep;
}

}  // namespace rct
