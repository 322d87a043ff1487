#pragma once

#include "rct/sparse_poly.hpp"
#include "rct/univariate.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rct {

inline constexpr int kDefaultMaxDegree = 8;

/// Names a1..ad, in variable order.
std::vector<std::string> coefficient_vars(int d);

/// num / den with both parts substitutable-homogeneous.
struct SubstRationalFn {
  SparsePoly num;
  SparsePoly den;
  ShdValue shd = ShdValue::any();

  /// Throws std::invalid_argument if den is zero or either part is not
  /// substitutable-homogeneous.
  static SubstRationalFn make(SparsePoly num, SparsePoly den);
  bool is_zero() const { return num.is_zero(); }
  /// Throws std::domain_error when den vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;
};

/// Equal as rational functions.
bool equivalent(const SubstRationalFn& a, const SubstRationalFn& b);

/// A = sum p_i x^{D-i}, B = sum q_i x^{D-1-i}, coefficients leading first.
struct SubstitutablePair {
  std::vector<SubstRationalFn> A;
  std::vector<SubstRationalFn> B;
  int c = 0;
};

/// The constant c with shd(q_i) - shd(p_i) = c and shd(p_i) = i + shd(p_0)
/// for i < len(q), or nullopt when the conditions fail. Zero coefficients
/// impose no condition; p_0 and q_0 must be nonzero.
std::optional<int> substitutable_pair_constant(std::span<const ShdValue> p, std::span<const ShdValue> q);

/// Checks the stored c against the coefficient data.
bool is_substitutable_pair(const SubstitutablePair& pair);

/// Sturm sequence of x^d + a1 x^{d-1} + ... + ad over Q(a1..ad).
///
/// Entry j is kept as f_j = lambda_j * P_j, where P_j has polynomial
/// coefficients (the subresultant chain of f and f') and
/// lambda_j = constant_j * prod_k lead_k^{exponent_jk} with lead_k = lc_x(P_k).
class SymbolicSturm {
 public:
  int degree() const noexcept { return d_; }
  std::size_t length() const noexcept { return reps_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }

  /// Coefficients of P_j, leading first; P_j has x-degree d - j.
  const std::vector<SparsePoly>& representative(std::size_t j) const { return reps_.at(j); }
  const SparsePoly& lead(std::size_t j) const { return reps_.at(j).front(); }
  const Rational& scale_constant(std::size_t j) const { return constants_.at(j); }
  /// Exponent of lead_k in lambda_j, indexed by k (zero beyond j).
  const std::vector<int>& scale_exponents(std::size_t j) const { return exponents_.at(j); }

  /// shd of coefficient k of f_j, computed from the factored form.
  ShdValue coefficient_shd(std::size_t j, std::size_t k) const;
  /// Coefficient k of f_j as a rational function.
  SubstRationalFn coefficient(std::size_t j, std::size_t k) const;
  /// Leading coefficient of f_j.
  SubstRationalFn leading_coefficient(std::size_t j) const { return coefficient(j, 0); }

  /// (f_j, f_{j+1}) with materialized coefficients.
  SubstitutablePair pair(std::size_t j) const;
  /// c for (f_j, f_{j+1}) from the factored shd data.
  std::optional<int> pair_constant(std::size_t j) const;

  /// f_0..f_d at a point; nullopt if some lead vanishes there.
  std::optional<std::vector<UniPoly>> specialize(std::span<const Rational> a) const;

 private:
  friend SymbolicSturm build_symbolic_sturm(int d);
  int d_ = 0;
  std::vector<std::string> vars_;
  std::vector<std::vector<SparsePoly>> reps_;
  std::vector<Rational> constants_;
  std::vector<std::vector<int>> exponents_;
  std::vector<std::vector<ShdValue>> rep_shd_;
};

/// Builds without touching the memo table. Throws std::logic_error if a step
/// produces a zero remainder, a wrong degree, an inexact division, or breaks
/// the pair conditions.
SymbolicSturm build_symbolic_sturm(int d);

/// Memoized per d; safe to call from several threads. Throws
/// std::invalid_argument unless 2 <= d <= max_degree.
const SymbolicSturm& symbolic_sturm(int d, int max_degree = kDefaultMaxDegree);

/// A power of an earlier critical polynomial, as used in the denominators.
struct CriticalFactor {
  int index;  // j of F_j
  int exponent;
};

/// lc(f_j) = scale_j * F_j / w_j^2 with w_j = prod F_k^{e_k} over earlier k.
struct CriticalSet {
  int d = 0;
  /// F_2..F_d: primitive integer polynomials, sign as in lc(f_j).
  std::vector<SparsePoly> F;
  /// Parallel to F.
  std::vector<std::vector<CriticalFactor>> w;
  /// Parallel to F, all positive.
  std::vector<Rational> scale;

  const SparsePoly& at(int j) const { return F.at(static_cast<std::size_t>(j - 2)); }
  /// w_j as a rational function (exponents may be negative).
  SubstRationalFn w_function(int j) const;
};

const CriticalSet& critical_polynomials(int d, int max_degree = kDefaultMaxDegree);

enum class RootVerdict { yes, no, degenerate };
std::string to_string(RootVerdict v);

/// Verdict from the signs of F_2..F_d at (a1..ad); degenerate when some
/// F_j vanishes. d = 1 is always yes.
RootVerdict has_d_distinct_real_roots(std::span<const Rational> coeffs, int max_degree = kDefaultMaxDegree);

/// x^n + a1 x^{n-1} + ... + an as a univariate polynomial.
UniPoly monic_from_coefficients(std::span<const Rational> coeffs);

/// Membership in S_n; degenerate verdicts and n beyond max_degree fall back
/// to a direct Sturm count.
bool in_S_n(std::span<const Rational> point, int max_degree = kDefaultMaxDegree);

}  // namespace rct
