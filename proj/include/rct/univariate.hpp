#pragma once

#include "rct/sparse_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rct {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  /// `p` must not involve any variable other than `var`.
  static UniPoly from_sparse(const SparsePoly& p, const std::string& var);
  SparsePoly to_sparse(const std::string& var) const;

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// kZeroDegree for the zero polynomial.
  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  const Rational& leading_coefficient() const;
  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<Rational> c_;
  void trim();
};

/// Quotient and remainder with f = q*g + r, deg r < deg g. Throws on g = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);

/// Division of univariate polynomials in `var`. Other variables may occur in
/// f as long as the leading coefficient of g in `var` is a nonzero rational
/// constant (so the quotient stays polynomial). When `var` is empty both
/// inputs must involve at most one and the same variable.
std::pair<SparsePoly, SparsePoly> poly_divmod(const SparsePoly& f, const SparsePoly& g, std::string var = {});

/// Pseudo-division in `var` over the polynomial ring of the other variables:
/// lc(g)^(deg f - deg g + 1) * f = q*g + r with deg_var r < deg_var g.
std::pair<SparsePoly, SparsePoly> pseudo_divmod(const SparsePoly& f, const SparsePoly& g, const std::string& var);

}  // namespace rct
