#pragma once

#include "rct/chow.hpp"
#include "rct/divisors.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rct {

/// Points of P^N with multiplicities. Each point is scaled so its first
/// nonzero coordinate is 1 and repeated points are merged.
struct ZeroCycle {
  int N = 0;
  std::vector<std::pair<Point, int>> points;

  /// Throws std::invalid_argument on zero vectors, mixed dimensions, or
  /// non-positive multiplicities.
  static ZeroCycle make(std::vector<std::pair<Point, int>> points);
  int degree() const;
};

/// Float output of the fan: coordinates in P^N with multiplicities.
struct FloatCycle {
  int N = 0;
  std::vector<std::pair<std::vector<double>, int>> points;
  int degree() const;
};

struct FiberCertificate {
  std::size_t point = 0;  // index into the input cycle
  int sturm_count = 0;
  std::vector<double> roots;  // s values, ascending
};

struct FanResult {
  FloatCycle output;
  Rational t;
  double residual = 0;  // distance of output to d * Z
  std::vector<FiberCertificate> fibers;
};

/// Raised when a fiber polynomial does not have d distinct real roots.
class FiberError : public std::domain_error {
 public:
  FiberError(std::size_t point, int count);
  std::size_t point() const noexcept { return point_; }
  int count() const noexcept { return count_; }

 private:
  std::size_t point_;
  int count_;
};

/// Sine of the angle between two nonzero vectors (projective distance).
double projective_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Greedy matching of the two cycles expanded by multiplicity; the largest
/// matched distance. Throws std::invalid_argument on degree mismatch.
double cycle_distance(const FloatCycle& a, const FloatCycle& b);

/// d * Z as a FloatCycle.
FloatCycle multiply_cycle(const ZeroCycle& Z, int d);

/// Intersect the suspension of Z (a 0-cycle in P^{n+1}, sitting in
/// {x0 = 0} of P^{n+2}) with the divisor f_t and project from (1:1:0..0)
/// by (x0 : ... : x_{n+2}) -> (x1 - x0 : x2 : ... : x_{n+2}).
/// D must be normalized on P^{n+2} and satisfy the g(t) condition.
FanResult psi_demo(const ZeroCycle& Z, const Divisor& D, const Rational& t, int threads = 0);

/// Residuals of psi_demo for a strictly decreasing sequence of t in (0, 1].
std::vector<double> limit_check(const ZeroCycle& Z, const Divisor& D, const std::vector<Rational>& ts,
                                int threads = 0);

/// Least-squares slope of log(residual) against log(t).
double loglog_slope(const std::vector<Rational>& ts, const std::vector<double>& residuals);

struct FanDemo {
  ZeroCycle Z;
  Divisor D;
  std::vector<Rational> ts;
};

/// Two rational points in P^2 and D = x0^2 - (x1^2 + x2^2 + x3^2)/4, the
/// first family member with x1..x3 scaled by 1/2 so that g(t) = 1 - t^2/4.
FanDemo default_demo();

}  // namespace rct
