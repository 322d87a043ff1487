#include "rct/critical.hpp"

#include "rct/sturm.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace rct {

std::vector<std::string> coefficient_vars(int d) {
  std::vector<std::string> vars;
  for (int j = 1; j <= d; ++j) vars.push_back("a" + std::to_string(j));
  return vars;
}

// ---------------------------------------------------------------------------

SubstRationalFn SubstRationalFn::make(SparsePoly num, SparsePoly den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  ShdValue sn = substituted_degree(num);
  ShdValue sd = substituted_degree(den);
  if (!sn.is_homogeneous() || !sd.is_homogeneous())
    throw std::invalid_argument("rational function parts must be substitutable-homogeneous");
  SubstRationalFn f;
  f.shd = sn.is_any() ? ShdValue::any() : ShdValue::of(*sn.value() - *sd.value());
  f.num = std::move(num);
  f.den = std::move(den);
  return f;
}

Rational SubstRationalFn::evaluate(std::span<const Rational> point) const {
  std::vector<std::string> vars = merge_vars(num.vars(), den.vars());
  Rational d = den.aligned(vars).evaluate(point);
  if (d == 0) throw std::domain_error("denominator vanishes at the point");
  Rational n = num.aligned(vars).evaluate(point);
  return Rational(n / d);
}

bool equivalent(const SubstRationalFn& a, const SubstRationalFn& b) {
  return a.num * b.den == b.num * a.den;
}

std::optional<int> substitutable_pair_constant(std::span<const ShdValue> p, std::span<const ShdValue> q) {
  if (p.empty() || q.empty() || q.size() + 1 != p.size()) return std::nullopt;
  if (!p[0].value() || !q[0].value()) return std::nullopt;
  int p0 = *p[0].value();
  int c = *q[0].value() - p0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_homogeneous()) return std::nullopt;
    if (!p[i].compatible_with(p0 + static_cast<int>(i))) return std::nullopt;
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q[i].is_homogeneous()) return std::nullopt;
    if (!q[i].compatible_with(p0 + static_cast<int>(i) + c)) return std::nullopt;
  }
  return c;
}

bool is_substitutable_pair(const SubstitutablePair& pair) {
  std::vector<ShdValue> p, q;
  for (const auto& f : pair.A) p.push_back(f.shd);
  for (const auto& f : pair.B) q.push_back(f.shd);
  auto c = substitutable_pair_constant(p, q);
  return c && *c == pair.c;
}

// ---------------------------------------------------------------------------

namespace {

SparsePoly power_product(const std::vector<SparsePoly>& base, const std::vector<int>& exps, bool negative,
                         const std::vector<std::string>& vars) {
  SparsePoly out = SparsePoly::constant(1, vars);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    int e = negative ? -exps[k] : exps[k];
    if (e > 0) out *= base[k].pow(static_cast<unsigned>(e));
  }
  return out;
}

// Multiplies lambda (constant, exponents) by lead_k^e, folding constant leads.
void scale_by_lead(Rational& constant, std::vector<int>& exps, const SparsePoly& lead, std::size_t k, int e) {
  if (lead.is_constant()) {
    Rational c = lead.constant_term();
    Rational f = pow(c, static_cast<unsigned>(std::abs(e)));
    if (e > 0)
      constant *= f;
    else
      constant /= f;
  } else {
    exps[k] += e;
  }
}

UniPoly specialize_rep(const std::vector<SparsePoly>& rep, std::span<const Rational> a) {
  std::vector<Rational> c(rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) c[rep.size() - 1 - i] = rep[i].evaluate(a);
  return UniPoly(std::move(c));
}

// The Euclidean step checked at a few integer points: lc(B)^2 * rem(A, B)
// must equal beta * C there.
void check_step_at_points(const std::vector<SparsePoly>& A, const std::vector<SparsePoly>& B,
                          const std::vector<SparsePoly>& C, bool use_beta, int d) {
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(A.size()));
  std::uniform_int_distribution<int> dist(-9, 9);
  int checked = 0;
  for (int attempt = 0; attempt < 40 && checked < 3; ++attempt) {
    std::vector<Rational> a(static_cast<std::size_t>(d));
    for (auto& v : a) v = dist(rng);
    UniPoly Ap = specialize_rep(A, a), Bp = specialize_rep(B, a), Cp = specialize_rep(C, a);
    if (Bp.degree() + 1 != static_cast<int>(B.size()) || Ap.degree() + 1 != static_cast<int>(A.size())) continue;
    Rational lb = Bp.leading_coefficient();
    Rational beta = use_beta ? Rational(Ap.leading_coefficient() * Ap.leading_coefficient()) : Rational(1);
    UniPoly r = divmod(Ap, Bp).second;
    if (!(Rational(lb * lb) * r == beta * Cp))
      throw std::logic_error("symbolic Sturm step disagrees with the Euclidean remainder");
    ++checked;
  }
}

}  // namespace

ShdValue SymbolicSturm::coefficient_shd(std::size_t j, std::size_t k) const {
  const ShdValue& s = rep_shd_.at(j).at(k);
  if (!s.value()) return s;
  int v = *s.value();
  const auto& exps = exponents_.at(j);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) v += exps[i] * *rep_shd_[i][0].value();
  return ShdValue::of(v);
}

SubstRationalFn SymbolicSturm::coefficient(std::size_t j, std::size_t k) const {
  std::vector<SparsePoly> leads;
  for (const auto& rep : reps_) leads.push_back(rep.front());
  const auto& exps = exponents_.at(j);
  SparsePoly num = constants_.at(j) * power_product(leads, exps, false, vars_) * reps_.at(j).at(k);
  SparsePoly den = power_product(leads, exps, true, vars_);
  return SubstRationalFn::make(std::move(num), std::move(den));
}

SubstitutablePair SymbolicSturm::pair(std::size_t j) const {
  SubstitutablePair out;
  for (std::size_t k = 0; k < reps_.at(j).size(); ++k) out.A.push_back(coefficient(j, k));
  for (std::size_t k = 0; k < reps_.at(j + 1).size(); ++k) out.B.push_back(coefficient(j + 1, k));
  auto c = pair_constant(j);
  if (!c) throw std::logic_error("consecutive Sturm entries do not form a substitutable pair");
  out.c = *c;
  return out;
}

std::optional<int> SymbolicSturm::pair_constant(std::size_t j) const {
  std::vector<ShdValue> p, q;
  for (std::size_t k = 0; k < reps_.at(j).size(); ++k) p.push_back(coefficient_shd(j, k));
  for (std::size_t k = 0; k < reps_.at(j + 1).size(); ++k) q.push_back(coefficient_shd(j + 1, k));
  return substitutable_pair_constant(p, q);
}

std::optional<std::vector<UniPoly>> SymbolicSturm::specialize(std::span<const Rational> a) const {
  if (a.size() != static_cast<std::size_t>(d_)) throw std::invalid_argument("point has the wrong dimension");
  std::vector<Rational> leads;
  for (const auto& rep : reps_) {
    leads.push_back(rep.front().evaluate(a));
    if (leads.back() == 0) return std::nullopt;
  }
  std::vector<UniPoly> out;
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    Rational lambda = constants_[j];
    for (std::size_t k = 0; k < exponents_[j].size(); ++k) {
      int e = exponents_[j][k];
      if (e > 0) lambda *= pow(leads[k], static_cast<unsigned>(e));
      if (e < 0) lambda /= pow(leads[k], static_cast<unsigned>(-e));
    }
    out.push_back(lambda * specialize_rep(reps_[j], a));
  }
  return out;
}

SymbolicSturm build_symbolic_sturm(int d) {
  if (d < 2) throw std::invalid_argument("symbolic Sturm sequence needs d >= 2");
  SymbolicSturm s;
  s.d_ = d;
  s.vars_ = coefficient_vars(d);
  const auto& vars = s.vars_;
  const auto n = static_cast<std::size_t>(d) + 1;

  std::vector<SparsePoly> p0{SparsePoly::constant(1, vars)};
  for (const auto& v : vars) p0.push_back(SparsePoly::variable(v).aligned(vars));
  std::vector<SparsePoly> p1;
  for (int k = 0; k < d; ++k) p1.push_back(Rational(d - k) * p0[static_cast<std::size_t>(k)]);
  s.reps_ = {std::move(p0), std::move(p1)};
  s.constants_ = {Rational(1), Rational(1)};
  s.exponents_ = {std::vector<int>(n, 0), std::vector<int>(n, 0)};

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const auto& A = s.reps_[i - 1];
    const auto& B = s.reps_[i];
    const std::size_t D = A.size() - 1;
    const SparsePoly zero(vars);
    // Pseudo-remainder coefficients:
    // a_{k+2} b0^2 - a0 b0 b_{k+2} - a1 b0 b_{k+1} + a0 b1 b_{k+1}, with b_D = 0.
    SparsePoly a0b1 = A[0] * B[1];
    std::vector<SparsePoly> C;
    for (std::size_t k = 0; k + 2 <= D; ++k) {
      const SparsePoly& bk2 = k + 2 < B.size() ? B[k + 2] : zero;
      SparsePoly inner = B[0] * A[k + 2] - A[0] * bk2 - A[1] * B[k + 1];
      SparsePoly r = B[0] * inner + a0b1 * B[k + 1];
      if (i >= 2) {
        // beta = lc(A)^2, divided out one factor at a time.
        for (int rep = 0; rep < 2; ++rep) {
          auto q = divide_exact(r, A[0]);
          if (!q) throw std::logic_error("subresultant step is not an exact division");
          r = std::move(*q);
        }
      }
      C.push_back(std::move(r));
    }
    if (C.empty() || C.front().is_zero())
      throw std::logic_error("symbolic remainder has the wrong degree");
    check_step_at_points(A, B, C, i >= 2, d);

    // lambda_{i+1} = -lambda_{i-1} * beta / lc(B)^2
    Rational constant = -s.constants_[i - 1];
    std::vector<int> exps = s.exponents_[i - 1];
    if (i >= 2) scale_by_lead(constant, exps, A[0], i - 1, 2);
    scale_by_lead(constant, exps, B[0], i, -2);
    s.reps_.push_back(std::move(C));
    s.constants_.push_back(constant);
    s.exponents_.push_back(std::move(exps));
  }
  if (s.reps_.size() != n) throw std::logic_error("symbolic Sturm sequence has the wrong length");
  for (std::size_t j = 0; j < n; ++j)
    if (s.reps_[j].size() != n - j) throw std::logic_error("symbolic Sturm entry has the wrong degree");

  for (const auto& rep : s.reps_) {
    std::vector<ShdValue> shds;
    for (const auto& c : rep) {
      shds.push_back(substituted_degree(c));
      if (!shds.back().is_homogeneous()) throw std::logic_error("Sturm coefficient is not substitutable-homogeneous");
    }
    s.rep_shd_.push_back(std::move(shds));
  }
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (!s.pair_constant(j)) throw std::logic_error("consecutive Sturm entries do not form a substitutable pair");
  return s;
}

namespace {

void check_degree(int d, int max_degree) {
  if (d < 2 || d > max_degree)
    throw std::invalid_argument("degree " + std::to_string(d) + " outside 2.." + std::to_string(max_degree));
}

CriticalSet build_critical_set(const SymbolicSturm& s) {
  CriticalSet out;
  const int d = s.degree();
  out.d = d;
  std::vector<Rational> content(static_cast<std::size_t>(d) + 1, Rational(1));
  for (int j = 2; j <= d; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    Rational c;
    SparsePoly prim = primitive_part(s.lead(uj), &c);
    content[uj] = c;
    const Rational& kappa = s.scale_constant(uj);
    Rational scale = abs(kappa) * c;
    std::vector<CriticalFactor> w;
    const auto& exps = s.scale_exponents(uj);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      int e = exps[k];
      if (e == 0) continue;
      if (e % 2 != 0 || k < 2) throw std::logic_error("unexpected factor in the Sturm scaling");
      scale *= e > 0 ? pow(content[k], static_cast<unsigned>(e)) : Rational(1 / pow(content[k], static_cast<unsigned>(-e)));
      w.push_back(CriticalFactor{static_cast<int>(k), -e / 2});
    }
    out.F.push_back(kappa < 0 ? -prim : prim);
    out.w.push_back(std::move(w));
    out.scale.push_back(scale);
  }
  return out;
}

template <class T>
struct Memo {
  std::mutex mutex;
  std::map<int, std::unique_ptr<const T>> table;

  template <class Make>
  const T& get(int d, Make make) {
    std::lock_guard lock(mutex);
    auto it = table.find(d);
    if (it == table.end()) it = table.emplace(d, std::make_unique<const T>(make())).first;
    return *it->second;
  }
};

}  // namespace

const SymbolicSturm& symbolic_sturm(int d, int max_degree) {
  check_degree(d, max_degree);
  static Memo<SymbolicSturm> memo;
  return memo.get(d, [d] { return build_symbolic_sturm(d); });
}

SubstRationalFn CriticalSet::w_function(int j) const {
  const auto& factors = w.at(static_cast<std::size_t>(j - 2));
  auto vars = coefficient_vars(d);
  SparsePoly num = SparsePoly::constant(1, vars), den = SparsePoly::constant(1, vars);
  for (const auto& f : factors) {
    const SparsePoly& base = at(f.index);
    if (f.exponent > 0) num *= base.pow(static_cast<unsigned>(f.exponent));
    if (f.exponent < 0) den *= base.pow(static_cast<unsigned>(-f.exponent));
  }
  return SubstRationalFn::make(std::move(num), std::move(den));
}

const CriticalSet& critical_polynomials(int d, int max_degree) {
  check_degree(d, max_degree);
  static Memo<CriticalSet> memo;
  const SymbolicSturm& s = symbolic_sturm(d, max_degree);
  return memo.get(d, [&s] { return build_critical_set(s); });
}

std::string to_string(RootVerdict v) {
  switch (v) {
    case RootVerdict::yes: return "true";
    case RootVerdict::no: return "false";
    case RootVerdict::degenerate: return "degenerate";
  }
  return "?";
}

RootVerdict has_d_distinct_real_roots(std::span<const Rational> coeffs, int max_degree) {
  const int d = static_cast<int>(coeffs.size());
  if (d == 0) throw std::invalid_argument("need at least one coefficient");
  if (d == 1) return RootVerdict::yes;
  const CriticalSet& cs = critical_polynomials(d, max_degree);
  // Leading signs of f_0..f_d at +infinity; f_0 and f_1 have positive leads.
  std::vector<int> plus{1, 1}, minus;
  for (int j = 2; j <= d; ++j) {
    int sg = sign(cs.at(j).evaluate(coeffs));
    if (sg == 0) return RootVerdict::degenerate;
    plus.push_back(sg);
  }
  // At -infinity f_j carries an extra (-1)^{deg f_j} = (-1)^{d-j}.
  for (int j = 0; j <= d; ++j) minus.push_back((d - j) % 2 == 0 ? plus[static_cast<std::size_t>(j)] : -plus[static_cast<std::size_t>(j)]);
  return sign_changes(minus) - sign_changes(plus) == d ? RootVerdict::yes : RootVerdict::no;
}

UniPoly monic_from_coefficients(std::span<const Rational> coeffs) {
  std::vector<Rational> c(coeffs.rbegin(), coeffs.rend());
  c.emplace_back(1);
  return UniPoly(std::move(c));
}

bool in_S_n(std::span<const Rational> point, int max_degree) {
  const int n = static_cast<int>(point.size());
  if (n == 0) throw std::invalid_argument("need at least one coefficient");
  if (n <= max_degree) {
    RootVerdict v = has_d_distinct_real_roots(point, max_degree);
    if (v != RootVerdict::degenerate) return v == RootVerdict::yes;
  }
  return count_distinct_roots_total(monic_from_coefficients(point)) == n;
}

}  // namespace rct
