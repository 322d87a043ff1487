#pragma once

#include "rct/rational.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rct {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Orders names by alternating text / number chunks so that x2 < x10 and
/// u1_2 < u1_10 < u2_0.
bool natural_less(std::string_view a, std::string_view b);

/// Graded-lex: higher total degree first, ties broken lexicographically with
/// the first variable most significant.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial exp;
  Rational coeff;
};

/// Sparse multivariate polynomial over the rationals.
///
/// The variable list is kept sorted by natural_less and free of duplicates;
/// binary operations align both operands on the union of their variable
/// lists. Terms are kept in descending graded-lex order with no zero
/// coefficients, so two equal polynomials over the same variable list have
/// identical term vectors. Values are immutable once built.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars);
  /// Canonicalizes: sorts variables, merges duplicate monomials, drops zeros.
  SparsePoly(std::vector<std::string> vars, std::vector<Term> terms);

  static SparsePoly constant(const Rational& c, std::vector<std::string> vars = {});
  static SparsePoly variable(const std::string& name);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  std::optional<std::size_t> var_index(std::string_view name) const;

  /// kZeroDegree for the zero polynomial.
  int total_degree() const noexcept;
  /// kZeroDegree for the zero polynomial, 0 if the variable does not occur.
  int degree_in(std::string_view var) const;
  /// Common total degree of all terms; nullopt if mixed or zero.
  std::optional<int> homogeneous_degree() const;

  Rational coefficient(const Monomial& exp) const;
  Rational constant_term() const;
  /// Coefficient of the graded-lex leading term; throws on zero.
  const Rational& leading_coefficient() const;

  /// Re-embeds into `vars`, which must contain every variable that occurs.
  SparsePoly aligned(const std::vector<std::string>& vars) const;
  /// Drops variables that never occur with a positive exponent.
  SparsePoly trimmed() const;
  /// Adds the given variable names (no-op for names already present).
  SparsePoly with_vars(const std::vector<std::string>& extra) const;

  /// Expansion in powers of `var`: entry k is the coefficient of var^k, a
  /// polynomial in the remaining variables.
  std::vector<SparsePoly> coefficients_in(std::string_view var) const;

  /// Point coordinates follow vars().
  Rational evaluate(std::span<const Rational> point) const;
  /// Every variable that occurs must be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Simultaneous substitution; unmapped variables are left alone.
  SparsePoly substitute(const std::map<std::string, SparsePoly>& images) const;

  SparsePoly pow(unsigned exponent) const;
  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rational& c, const SparsePoly& p);
  friend SparsePoly operator*(const SparsePoly& p, const Rational& c) { return c * p; }

  /// Mathematical equality (variable lists are aligned first).
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  /// Text form in the parser grammar, e.g. "x0^2 - 3/2*x1*x2".
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  static SparsePoly from_sorted(std::vector<std::string> vars, std::vector<Term> terms);
  static SparsePoly add_impl(const SparsePoly& a, const SparsePoly& b, bool subtract);
  friend std::optional<SparsePoly> divide_exact(const SparsePoly&, const SparsePoly&);
};

/// Sorted union of two variable lists.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// q with num = q * den exactly, or nullopt. Throws on den = 0.
std::optional<SparsePoly> divide_exact(const SparsePoly& num, const SparsePoly& den);

/// Divides out the positive rational content so that the integer
/// coefficients are coprime; the sign of the leading coefficient is kept.
/// Returns the removed positive factor through `removed` when non-null.
SparsePoly primitive_part(const SparsePoly& p, Rational* removed = nullptr);

/// True when a and b agree up to a nonzero rational factor.
bool projectively_equal(const SparsePoly& a, const SparsePoly& b);

// ---------------------------------------------------------------------------
// Substituted homogeneous degree

/// Weight of a coefficient variable: the trailing integer of its name
/// (a1 -> 1, a7 -> 7). Throws std::invalid_argument if there is none.
int shd_weight(std::string_view var);

/// shd(a_1^{i_1} ... a_n^{i_n}) = sum_j j * i_j, with weights taken from the
/// polynomial's variable names.
int shd(const Monomial& exp, const std::vector<std::string>& vars);

class ShdValue {
 public:
  static ShdValue of(int value) { return ShdValue(Kind::Value, value); }
  /// The zero polynomial is compatible with every shd.
  static ShdValue any() { return ShdValue(Kind::Any, 0); }
  static ShdValue inhomogeneous() { return ShdValue(Kind::Inhomogeneous, 0); }

  bool is_homogeneous() const noexcept { return kind_ != Kind::Inhomogeneous; }
  bool is_any() const noexcept { return kind_ == Kind::Any; }
  /// Set only for Kind::Value.
  std::optional<int> value() const;
  bool compatible_with(int v) const noexcept {
    return kind_ == Kind::Any || (kind_ == Kind::Value && value_ == v);
  }
  friend bool operator==(const ShdValue&, const ShdValue&) = default;

 private:
  enum class Kind { Value, Any, Inhomogeneous };
  ShdValue(Kind kind, int value) : kind_(kind), value_(value) {}
  Kind kind_;
  int value_;
};

ShdValue substituted_degree(const SparsePoly& p);
inline bool is_substitutable_homogeneous(const SparsePoly& p) {
  return substituted_degree(p).is_homogeneous();
}

/// f(g_1, ..., g_n) where f is substitutable-homogeneous in a_1..a_n and each
/// g_i is zero or homogeneous of degree exactly i. The result is checked to be
/// homogeneous of degree shd(f) (or zero) before it is returned.
SparsePoly substitute_graded(const SparsePoly& f, const std::vector<SparsePoly>& g);

}  // namespace rct
