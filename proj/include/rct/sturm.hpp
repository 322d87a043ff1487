#pragma once

#include "rct/univariate.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rct {

/// (f_0, ..., f_k) with f_0 = f, f_1 = f' and f_{i+1} = -rem(f_{i-1}, f_i),
/// computed by strict Euclidean division over the rationals. For a
/// non-squarefree f the chain stops early at gcd(f, f') (up to a constant).
struct SturmSeq {
  std::vector<UniPoly> polys;

  std::vector<SparsePoly> as_sparse(const std::string& var) const;
  /// Number of sign changes of (f_0(a), ..., f_k(a)).
  int sign_changes_at(const Rational& a) const;
  int sign_changes_at_pos_infinity() const;
  int sign_changes_at_neg_infinity() const;
};

/// Raised when an interval endpoint is itself a root of f; the Sturm count
/// is only stated for open intervals with non-root endpoints.
class EndpointRootError : public std::domain_error {
 public:
  explicit EndpointRootError(const Rational& point)
      : std::domain_error("interval endpoint " + to_string(point) + " is a root"), point_(point) {}
  const Rational& point() const noexcept { return point_; }

 private:
  Rational point_;
};

/// Throws std::invalid_argument for constant input.
SturmSeq sturm_sequence(const UniPoly& f);
SturmSeq sturm_sequence(const SparsePoly& f);

/// Sign changes after deleting zeros.
int sign_changes(std::span<const int> signs);

/// Distinct real roots in the open interval (a, b).
int count_distinct_roots_in(const UniPoly& f, const Rational& a, const Rational& b);
int count_distinct_roots_in(const SturmSeq& seq, const Rational& a, const Rational& b);

/// Distinct real roots on the whole line, from the signs at +-infinity read
/// off the leading coefficients and degrees.
int count_distinct_roots_total(const UniPoly& f);
int count_distinct_roots_total(const SturmSeq& seq);

/// Cauchy bound 1 + max |c_i| / |c_lead|: every real root lies strictly inside.
Rational cauchy_bound(const UniPoly& f);

/// Widens [a, b] to (a', b') with a' <= a, b' >= b, non-root endpoints, and
/// the same roots: (a', b') contains exactly the roots of f in [a, b].
std::pair<Rational, Rational> nudge_endpoints(const UniPoly& f, const Rational& a, const Rational& b);

/// Either an open interval (lo, hi) with non-root endpoints holding exactly
/// one root, or lo == hi when bisection landed on the root exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// One interval per distinct real root, in increasing order, each no wider
/// than `precision` (> 0). Works for non-squarefree f.
std::vector<RootInterval> isolate_roots_bisection(const UniPoly& f, const Rational& precision);

}  // namespace rct
