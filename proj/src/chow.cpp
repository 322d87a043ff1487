#include "rct/chow.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace rct {

std::string chow_var(int group, int coord) { return "u" + std::to_string(group) + "_" + std::to_string(coord); }

std::vector<std::string> chow_vars(int N, int r) {
  std::vector<std::string> vars;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= N; ++j) vars.push_back(chow_var(i, j));
  return vars;
}

MHForm MHForm::make(int N, int r, int d, int m, SparsePoly form) {
  if (N < 1 || r < 0 || r >= N) throw std::invalid_argument("need 0 <= r < N");
  if (d < 1) throw std::invalid_argument("form degree must be positive");
  if (m < 0 || m > N) throw std::invalid_argument("split index m outside 0..N");
  if (form.is_zero()) throw std::invalid_argument("zero form");
  auto vars = chow_vars(N, r);
  for (const auto& v : form.vars())
    if (!std::binary_search(vars.begin(), vars.end(), v, [](const std::string& a, const std::string& b) {
          return natural_less(a, b);
        }))
      if (form.degree_in(v) > 0) throw std::invalid_argument("unexpected variable " + v);
  SparsePoly aligned = form.trimmed().aligned(vars);
  const auto width = static_cast<std::size_t>(N) + 1;
  for (const auto& t : aligned.terms()) {
    for (int i = 0; i <= r; ++i) {
      Exponent sum = 0;
      for (std::size_t j = 0; j < width; ++j) sum += t.exp[static_cast<std::size_t>(i) * width + j];
      if (sum != static_cast<Exponent>(d))
        throw std::invalid_argument("form is not of degree " + std::to_string(d) + " in group " + std::to_string(i));
    }
  }
  MHForm f;
  f.N = N;
  f.r = r;
  f.d = d;
  f.m = m;
  f.form = std::move(aligned);
  return f;
}

MHForm MHForm::with_split(int new_m) const { return make(N, r, d, new_m, form); }

// ---------------------------------------------------------------------------

int rank(Matrix a) {
  int rk = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rk) < rows; ++c) {
    auto pivot = static_cast<std::size_t>(rk);
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(rk)]);
    const auto& p = a[static_cast<std::size_t>(rk)];
    for (std::size_t i = static_cast<std::size_t>(rk) + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * p[j];
    }
    ++rk;
  }
  return rk;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

namespace {

SparsePoly poly_determinant(const std::vector<std::vector<SparsePoly>>& m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  SparsePoly out(vars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<SparsePoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<SparsePoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    SparsePoly term = m[0][c] * poly_determinant(minor, vars);
    if (c % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

// sum_j u<group>_j p_j
SparsePoly pairing(int group, const Point& p, const std::vector<std::string>& vars) {
  std::vector<Term> terms;
  const std::size_t width = p.size();
  for (std::size_t j = 0; j < width; ++j) {
    if (p[j] == 0) continue;
    Monomial e(vars.size(), 0);
    e[static_cast<std::size_t>(group) * width + j] = 1;
    terms.push_back(Term{std::move(e), p[j]});
  }
  return SparsePoly(vars, std::move(terms));
}

bool is_zero_point(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

MHForm chow_of_points(const std::vector<std::pair<Point, int>>& points, int m) {
  if (points.empty()) throw std::invalid_argument("empty 0-cycle");
  const std::size_t width = points.front().first.size();
  if (width < 2) throw std::invalid_argument("points need at least two coordinates");
  const int N = static_cast<int>(width) - 1;
  auto vars = chow_vars(N, 0);
  SparsePoly F = SparsePoly::constant(1, vars);
  int d = 0;
  for (const auto& [p, mult] : points) {
    if (p.size() != width) throw std::invalid_argument("points of different dimensions");
    if (is_zero_point(p)) throw std::invalid_argument("zero vector is not a projective point");
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    F *= pairing(0, p, vars).pow(static_cast<unsigned>(mult));
    d += mult;
  }
  return MHForm::make(N, 0, d, m, std::move(F));
}

MHForm chow_of_linear(const std::vector<Point>& span, int m) {
  if (span.empty()) throw std::invalid_argument("empty spanning set");
  const std::size_t width = span.front().size();
  for (const auto& p : span)
    if (p.size() != width) throw std::invalid_argument("points of different dimensions");
  if (rank(span) != static_cast<int>(span.size())) throw std::invalid_argument("spanning points are dependent");
  const int N = static_cast<int>(width) - 1;
  const int r = static_cast<int>(span.size()) - 1;
  auto vars = chow_vars(N, r);
  std::vector<std::vector<SparsePoly>> mat;
  for (int i = 0; i <= r; ++i) {
    std::vector<SparsePoly> row;
    for (const auto& p : span) row.push_back(pairing(i, p, vars));
    mat.push_back(std::move(row));
  }
  return MHForm::make(N, r, 1, m, poly_determinant(mat, vars));
}

MHForm mul_cycles(const MHForm& F, const MHForm& G) {
  if (F.N != G.N || F.r != G.r || F.m != G.m) throw std::invalid_argument("forms of different shapes");
  return MHForm::make(F.N, F.r, F.d + G.d, F.m, F.form * G.form);
}

// ---------------------------------------------------------------------------

TExpansion t_expand(const MHForm& F) {
  const auto& vars = F.form.vars();
  const auto width = static_cast<std::size_t>(F.N) + 1;
  std::map<int, std::vector<Term>> by_power;
  for (const auto& t : F.form.terms()) {
    int power = 0;
    for (int i = 0; i <= F.r; ++i)
      for (int j = 0; j <= F.m; ++j)
        power += static_cast<int>(t.exp[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)]);
    by_power[power].push_back(t);
  }
  TExpansion out;
  out.L = by_power.rbegin()->first;
  out.g.assign(static_cast<std::size_t>(out.L) + 1, SparsePoly(vars));
  for (auto& [power, terms] : by_power) out.g[static_cast<std::size_t>(power)] = SparsePoly(vars, std::move(terms));
  out.bound_ok = out.L <= (F.m + 1) * F.d;
  return out;
}

MHForm apply_t(const MHForm& F, const Rational& t) {
  if (t == 0) throw std::invalid_argument("^t needs t != 0");
  TExpansion e = t_expand(F);
  SparsePoly out(F.form.vars());
  for (std::size_t i = 0; i < e.g.size(); ++i) out += pow(t, static_cast<unsigned>(i)) * e.g[i];
  return MHForm::make(F.N, F.r, F.d, F.m, std::move(out));
}

std::optional<int> eigenform_degree(const MHForm& F) {
  TExpansion e = t_expand(F);
  int nonzero = 0;
  for (const auto& g : e.g) nonzero += g.is_zero() ? 0 : 1;
  if (nonzero != 1) return std::nullopt;
  return e.L;
}

SuspensionReport suspension_report(const MHForm& F, bool proper_intersection) {
  SuspensionReport rep;
  rep.expected = (F.m + 1) * F.d;
  rep.s = eigenform_degree(F);
  rep.suspension = rep.s && *rep.s == rep.expected;
  rep.inconsistent = proper_intersection && rep.s && *rep.s < rep.expected;
  return rep;
}

Taffy::Taffy(const MHForm& F) : base_(F) {
  const int top = (F.m + 1) * F.d;
  TExpansion e = t_expand(F);
  if (e.L > top) throw std::invalid_argument("t-expansion exceeds the degree bound");
  if (e.L < top || e.g[static_cast<std::size_t>(top)].is_zero())
    throw std::domain_error("top coefficient vanishes: improper intersection with the base");
  for (int p = 0; p <= top; ++p) h_.push_back(e.g[static_cast<std::size_t>(top - p)]);
}

MHForm Taffy::at(const Rational& t) const {
  SparsePoly out(base_.form.vars());
  for (std::size_t p = 0; p < h_.size(); ++p) {
    if (h_[p].is_zero()) continue;
    out += pow(t, static_cast<unsigned>(p)) * h_[p];
  }
  return MHForm::make(base_.N, base_.r, base_.d, base_.m, std::move(out));
}

bool Taffy::is_constant() const {
  return std::all_of(h_.begin() + 1, h_.end(), [](const SparsePoly& p) { return p.is_zero(); });
}

bool det_action_check(const MHForm& F, const Matrix& A) {
  const auto groups = static_cast<std::size_t>(F.r) + 1;
  if (A.size() != groups) throw std::invalid_argument("matrix size must equal the number of groups");
  Rational det = determinant(A);
  if (det == 0) throw std::invalid_argument("singular matrix");
  const auto& vars = F.form.vars();
  std::map<std::string, SparsePoly> images;
  for (std::size_t i = 0; i < groups; ++i) {
    for (int k = 0; k <= F.N; ++k) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < groups; ++j) {
        if (A[i][j] == 0) continue;
        Monomial e(vars.size(), 0);
        e[j * (static_cast<std::size_t>(F.N) + 1) + static_cast<std::size_t>(k)] = 1;
        terms.push_back(Term{std::move(e), A[i][j]});
      }
      images.emplace(chow_var(static_cast<int>(i), k), SparsePoly(vars, std::move(terms)));
    }
  }
  return F.form.substitute(images) == pow(det, static_cast<unsigned>(F.d)) * F.form;
}

bool is_real_form(const MHForm& F) {
  return std::all_of(F.form.terms().begin(), F.form.terms().end(),
                     [](const Term& t) { return t.coeff.get_den() > 0; });
}

IncidenceReport incidence_check(const MHForm& F, const std::vector<Point>& span, int samples, std::uint64_t seed) {
  const auto width = static_cast<std::size_t>(F.N) + 1;
  for (const auto& p : span)
    if (p.size() != width) throw std::invalid_argument("span points have the wrong dimension");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  std::uniform_int_distribution<long> small(-5, 5);
  auto random_vec = [&] {
    Point v(width);
    for (auto& x : v) x = big(rng);
    return v;
  };
  IncidenceReport rep;
  std::vector<Rational> at(width * (static_cast<std::size_t>(F.r) + 1));
  for (int s = 0; s < samples; ++s) {
    Point x(width, Rational(0));
    while (is_zero_point(x)) {
      std::fill(x.begin(), x.end(), Rational(0));
      for (const auto& p : span) {
        Rational c = small(rng);
        for (std::size_t k = 0; k < width; ++k) x[k] += c * p[k];
      }
    }
    std::size_t lead = 0;
    while (x[lead] == 0) ++lead;
    for (int i = 0; i <= F.r; ++i) {
      Point xi = random_vec();
      Rational dot = 0;
      for (std::size_t k = 0; k < width; ++k) dot += xi[k] * x[k];
      xi[lead] -= dot / x[lead];
      std::copy(xi.begin(), xi.end(), at.begin() + static_cast<long>(i * width));
    }
    ++rep.through;
    if (F.form.evaluate(at) == 0) ++rep.through_vanishing;

    for (int i = 0; i <= F.r; ++i) {
      Point xi = random_vec();
      std::copy(xi.begin(), xi.end(), at.begin() + static_cast<long>(i * width));
    }
    ++rep.generic;
    if (F.form.evaluate(at) == 0) ++rep.generic_vanishing;
  }
  return rep;
}

}  // namespace rct
