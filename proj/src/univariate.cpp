#include "rct/univariate.hpp"

#include <stdexcept>

namespace rct {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_sparse(const SparsePoly& p, const std::string& var) {
  auto parts = p.coefficients_in(var);
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    if (!part.is_constant()) throw std::invalid_argument("polynomial is not univariate in '" + var + "'");
    out.push_back(part.constant_term());
  }
  return UniPoly(std::move(out));
}

SparsePoly UniPoly::to_sparse(const std::string& var) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) terms.push_back(Term{Monomial{static_cast<Exponent>(k)}, c_[k]});
  return SparsePoly({var}, std::move(terms));
}

const Rational& UniPoly::leading_coefficient() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> out = p.c_;
  for (auto& c : out) c *= s;
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.degree() < g.degree()) return {UniPoly{}, f};
  std::vector<Rational> rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<Rational> quot(rem.size() - dg);
  Rational factor;
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    factor = rem[k] / gc[dg];
    quot[k - dg] = factor;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= factor * gc[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

std::string main_variable(const SparsePoly& f, const SparsePoly& g) {
  auto vars = merge_vars(f.trimmed().vars(), g.trimmed().vars());
  if (vars.size() > 1) throw std::invalid_argument("poly_divmod needs univariate inputs or an explicit variable");
  if (vars.empty()) {
    auto all = merge_vars(f.vars(), g.vars());
    return all.empty() ? std::string("x") : all.front();
  }
  return vars.front();
}

}  // namespace

std::pair<SparsePoly, SparsePoly> poly_divmod(const SparsePoly& f, const SparsePoly& g, std::string var) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (var.empty()) var = main_variable(f, g);
  auto vars = merge_vars(merge_vars(f.vars(), g.vars()), {var});
  auto gparts = g.coefficients_in(var);
  const auto& lead = gparts.back();
  if (!lead.is_constant())
    throw std::domain_error("leading coefficient of the divisor must be a rational constant");
  const Rational lc = lead.constant_term();
  const int dg = static_cast<int>(gparts.size()) - 1;
  auto x = SparsePoly::variable(var);

  SparsePoly quotient(vars);
  SparsePoly remainder = f.aligned(vars);
  for (;;) {
    int dr = remainder.degree_in(var);
    if (remainder.is_zero() || dr < dg) break;
    auto top = remainder.coefficients_in(var).back();
    auto step = Rational(1 / lc) * top * x.pow(static_cast<unsigned>(dr - dg));
    quotient += step;
    remainder -= step * g;
  }
  return {quotient.aligned(vars), remainder.aligned(vars)};
}

std::pair<SparsePoly, SparsePoly> pseudo_divmod(const SparsePoly& f, const SparsePoly& g, const std::string& var) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto vars = merge_vars(merge_vars(f.vars(), g.vars()), {var});
  auto gparts = g.coefficients_in(var);
  const auto lc = gparts.back().aligned(vars);
  const int dg = static_cast<int>(gparts.size()) - 1;
  const int df = f.degree_in(var);
  auto x = SparsePoly::variable(var);
  SparsePoly quotient(vars);
  SparsePoly remainder = f.aligned(vars);
  if (f.is_zero() || df < dg) return {quotient, remainder};
  int steps = df - dg + 1;
  for (;;) {
    int dr = remainder.degree_in(var);
    if (remainder.is_zero() || dr < dg) break;
    auto top = remainder.coefficients_in(var).back().aligned(vars);
    auto shift = x.pow(static_cast<unsigned>(dr - dg));
    quotient = lc * quotient + top * shift;
    remainder = lc * remainder - top * shift * g;
    --steps;
  }
  // Remaining factors of lc make the identity hold with the full exponent.
  auto scale = lc.pow(static_cast<unsigned>(steps));
  return {(scale * quotient).aligned(vars), (scale * remainder).aligned(vars)};
}

}  // namespace rct
