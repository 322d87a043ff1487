#pragma once

// Test-only reference computations. Nothing here calls into the Sturm
// machinery, so agreement with it is an independent check.

#include "rct/univariate.hpp"

#include <vector>

namespace rct::testing {

inline UniPoly monic_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return Rational(1 / a.leading_coefficient()) * a;
}

/// f / gcd(f, f').
inline UniPoly squarefree_part(const UniPoly& f) {
  auto g = monic_gcd(f, f.derivative());
  return divmod(f, g).first;
}

/// Coefficients of (1+x)^n p((a + b x) / (1 + x)); its sign variations bound
/// the number of roots of p in (a, b) with the same parity (Descartes).
inline int descartes_variations(const UniPoly& p, const Rational& a, const Rational& b) {
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<Rational> acc(n + 1);
  // (a + b x)^i (1 + x)^(n - i), accumulated term by term.
  for (std::size_t i = 0; i <= n; ++i) {
    if (p.coeffs()[i] == 0) continue;
    std::vector<Rational> term{Rational(1)};
    auto mul_linear = [&](const Rational& c0, const Rational& c1) {
      std::vector<Rational> next(term.size() + 1);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * c0;
        next[k + 1] += term[k] * c1;
      }
      term = std::move(next);
    };
    for (std::size_t k = 0; k < i; ++k) mul_linear(a, b);
    for (std::size_t k = i; k < n; ++k) mul_linear(Rational(1), Rational(1));
    for (std::size_t k = 0; k <= n; ++k) acc[k] += p.coeffs()[i] * term[k];
  }
  int variations = 0, last = 0;
  for (const auto& c : acc) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

inline int descartes_roots_in(const UniPoly& sf, const Rational& a, const Rational& b) {
  int v = descartes_variations(sf, a, b);
  if (v <= 1) return v;
  Rational m = (a + b) / 2;
  return (sf(m) == 0 ? 1 : 0) + descartes_roots_in(sf, a, m) + descartes_roots_in(sf, m, b);
}

/// Distinct real roots by Descartes-rule bisection on the squarefree part.
inline int descartes_distinct_real_roots(const UniPoly& f) {
  if (f.degree() < 1) return 0;
  auto sf = squarefree_part(f);
  if (sf.degree() < 1) return 0;
  Rational bound(1);
  const auto& c = sf.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) bound = std::max(bound, Rational(abs(c[k] / c.back()) + 1));
  bound += 1;
  return descartes_roots_in(sf, -bound, bound);
}

}  // namespace rct::testing
