#pragma once

#include "rct/sparse_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rct {

using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

/// u<i>_0 .. u<i>_N for each group i = 0..r, in variable order.
std::vector<std::string> chow_vars(int N, int r);
std::string chow_var(int group, int coord);

/// Multihomogeneous form: degree d in each of the r+1 groups of N+1
/// variables. The first m+1 coordinates of each group are scaled by ^t.
struct MHForm {
  int N = 0;
  int r = 0;
  int d = 0;
  int m = 0;
  SparsePoly form;

  /// Validates shape and multidegree; throws std::invalid_argument.
  static MHForm make(int N, int r, int d, int m, SparsePoly form);
  /// Same data with a different split index.
  MHForm with_split(int m) const;
};

/// Exact rank over Q.
int rank(Matrix rows);
/// Exact determinant; throws std::invalid_argument unless square.
Rational determinant(Matrix a);

/// prod_p (sum_j u0_j p_j)^mult; r = 0.
MHForm chow_of_points(const std::vector<std::pair<Point, int>>& points, int m = 0);
/// det[u^i . p_j] for r+1 independent points; d = 1.
MHForm chow_of_linear(const std::vector<Point>& span, int m = 0);
/// Cycle sum; throws on mismatched N, r or m.
MHForm mul_cycles(const MHForm& F, const MHForm& G);

/// ^tF = sum_i g[i] t^i.
struct TExpansion {
  std::vector<SparsePoly> g;
  int L = 0;
  /// L <= (m+1) d
  bool bound_ok = true;
};

TExpansion t_expand(const MHForm& F);
/// ^tF at a fixed t.
MHForm apply_t(const MHForm& F, const Rational& t);
/// s when ^tF = t^s F, i.e. exactly one g_s is nonzero.
std::optional<int> eigenform_degree(const MHForm& F);

struct SuspensionReport {
  bool suspension = false;
  std::optional<int> s;
  int expected = 0;  // (m+1) d
  /// Set when the caller claims proper intersection but s < (m+1) d.
  bool inconsistent = false;
};

SuspensionReport suspension_report(const MHForm& F, bool proper_intersection = false);
inline bool is_suspension(const MHForm& F) { return suspension_report(F).suspension; }

/// H(t) = sum_k g_k t^{top-k}, top = (m+1) d.
class Taffy {
 public:
  /// Throws std::domain_error when g_top = 0 and std::invalid_argument when
  /// the expansion exceeds top.
  explicit Taffy(const MHForm& F);
  MHForm at(const Rational& t) const;
  /// Coefficients of H in powers of t.
  const std::vector<SparsePoly>& coefficients() const noexcept { return h_; }
  bool is_constant() const;

 private:
  MHForm base_;
  std::vector<SparsePoly> h_;
};

/// F(A u) == det(A)^d F(u) for an (r+1)x(r+1) matrix mixing the groups.
/// Throws std::invalid_argument for a singular or wrongly sized A.
bool det_action_check(const MHForm& F, const Matrix& A);

/// Rational coefficients throughout; always true for forms held here, kept
/// so callers can state the closure property.
bool is_real_form(const MHForm& F);

struct IncidenceReport {
  int through = 0;           // tuples through a point of the span
  int through_vanishing = 0; // of those, F = 0
  int generic = 0;
  int generic_vanishing = 0;
  bool consistent() const { return through_vanishing == through && generic_vanishing == 0; }
};

/// Sampling sanity check: r+1 random hyperplanes through a common random
/// point of span(points) should make F vanish, generic ones should not.
IncidenceReport incidence_check(const MHForm& F, const std::vector<Point>& span, int samples, std::uint64_t seed);

}  // namespace rct
