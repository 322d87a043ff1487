#include "rct/magic_fan.hpp"

#include "rct/parallel.hpp"
#include "rct/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rct {

namespace {

Point normalize_point(Point p) {
  auto lead = std::find_if(p.begin(), p.end(), [](const Rational& c) { return c != 0; });
  if (lead == p.end()) throw std::invalid_argument("zero vector is not a projective point");
  Rational inv = 1 / *lead;
  for (auto& c : p) c *= inv;
  return p;
}

// 2^-40 ~ 9e-13 keeps the isolating intervals under 1e-12.
const Rational& root_precision() {
  static const Rational eps = pow(fraction(1, 2), 40);
  return eps;
}

}  // namespace

ZeroCycle ZeroCycle::make(std::vector<std::pair<Point, int>> points) {
  if (points.empty()) throw std::invalid_argument("empty cycle");
  ZeroCycle Z;
  Z.N = static_cast<int>(points.front().first.size()) - 1;
  if (Z.N < 1) throw std::invalid_argument("cycle points need at least two coordinates");
  for (auto& [p, mult] : points) {
    if (static_cast<int>(p.size()) != Z.N + 1) throw std::invalid_argument("cycle points of mixed dimension");
    if (mult <= 0) throw std::invalid_argument("multiplicities must be positive");
    Point q = normalize_point(std::move(p));
    auto it = std::find_if(Z.points.begin(), Z.points.end(), [&](const auto& e) { return e.first == q; });
    if (it != Z.points.end())
      it->second += mult;
    else
      Z.points.emplace_back(std::move(q), mult);
  }
  return Z;
}

int ZeroCycle::degree() const {
  int s = 0;
  for (const auto& [p, m] : points) s += m;
  return s;
}

int FloatCycle::degree() const {
  int s = 0;
  for (const auto& [p, m] : points) s += m;
  return s;
}

FiberError::FiberError(std::size_t point, int count)
    : std::domain_error("fiber over cycle point " + std::to_string(point) + " has " + std::to_string(count) +
                        " distinct real roots"),
      point_(point),
      count_(count) {}

double projective_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("points of different dimension");
  double aa = 0, bb = 0, ab = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    aa += a[i] * a[i];
    bb += b[i] * b[i];
    ab += a[i] * b[i];
  }
  if (aa == 0 || bb == 0) throw std::invalid_argument("zero vector");
  double c2 = (ab * ab) / (aa * bb);
  return std::sqrt(std::max(0.0, 1.0 - c2));
}

double cycle_distance(const FloatCycle& a, const FloatCycle& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("cycles of different degree");
  std::vector<const std::vector<double>*> left, right;
  for (const auto& [p, m] : a.points)
    for (int i = 0; i < m; ++i) left.push_back(&p);
  for (const auto& [p, m] : b.points)
    for (int i = 0; i < m; ++i) right.push_back(&p);
  // All pair distances, then take the globally closest unused pair each round.
  struct Pair {
    double dist;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) pairs.push_back({projective_distance(*left[i], *right[j]), i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.dist < y.dist; });
  std::vector<bool> used_l(left.size()), used_r(right.size());
  double worst = 0;
  for (const auto& p : pairs) {
    if (used_l[p.i] || used_r[p.j]) continue;
    used_l[p.i] = used_r[p.j] = true;
    worst = std::max(worst, p.dist);
  }
  return worst;
}

FloatCycle multiply_cycle(const ZeroCycle& Z, int d) {
  FloatCycle out;
  out.N = Z.N;
  for (const auto& [p, m] : Z.points) {
    std::vector<double> x;
    for (const auto& c : p) x.push_back(to_double(c));
    out.points.emplace_back(std::move(x), m * d);
  }
  return out;
}

FanResult psi_demo(const ZeroCycle& Z, const Divisor& D, const Rational& t, int threads) {
  if (D.n != Z.N + 1) throw std::invalid_argument("divisor must live on P^{N+1} for a cycle in P^N");
  if (t <= 0 || t > 1) throw std::invalid_argument("t must lie in (0, 1]");
  if (!D.normalized) throw std::invalid_argument("divisor is not normalized");
  if (!div_double_prime_g(D).holds) throw std::invalid_argument("g(t) vanishes on (0, 1]");

  Divisor Dt = scale_divisor(D, t);
  std::vector<FiberCertificate> fibers(Z.points.size());
  std::vector<std::vector<std::vector<double>>> images(Z.points.size());
  parallel_for(
      Z.points.size(),
      [&](std::size_t i) {
        const Point& q = Z.points[i].first;
        UniPoly f = Dt.restrict_to(q);
        int count = f.degree() >= 1 ? count_distinct_roots_total(f) : 0;
        if (count != D.d) throw FiberError(i, count);
        FiberCertificate& cert = fibers[i];
        cert.point = i;
        cert.sturm_count = count;
        for (const auto& iv : isolate_roots_bisection(f, root_precision())) {
          Rational mid = (iv.lo + iv.hi) / 2;
          double s = to_double(mid);
          cert.roots.push_back(s);
          // (s : q) -> (q1 - s : q2 : ... : q_{N+1})
          std::vector<double> y;
          y.push_back(to_double(q[0]) - s);
          for (std::size_t k = 1; k < q.size(); ++k) y.push_back(to_double(q[k]));
          bool nonzero = std::any_of(y.begin(), y.end(), [](double v) { return v != 0; });
          if (!nonzero) throw std::logic_error("fiber point is the projection centre");
          images[i].push_back(std::move(y));
        }
      },
      threads);

  FanResult res;
  res.t = t;
  res.output.N = Z.N;
  for (std::size_t i = 0; i < Z.points.size(); ++i)
    for (auto& y : images[i]) res.output.points.emplace_back(std::move(y), Z.points[i].second);
  res.fibers = std::move(fibers);
  res.residual = cycle_distance(res.output, multiply_cycle(Z, D.d));
  return res;
}

std::vector<double> limit_check(const ZeroCycle& Z, const Divisor& D, const std::vector<Rational>& ts, int threads) {
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] < ts[i - 1])) throw std::invalid_argument("t sequence must be strictly decreasing");
  std::vector<double> out;
  for (const auto& t : ts) out.push_back(psi_demo(Z, D, t, threads).residual);
  return out;
}

double loglog_slope(const std::vector<Rational>& ts, const std::vector<double>& residuals) {
  if (ts.size() != residuals.size() || ts.size() < 2) throw std::invalid_argument("need two or more samples");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (residuals[i] <= 0) return std::numeric_limits<double>::quiet_NaN();
    x.push_back(std::log(to_double(ts[i])));
    y.push_back(std::log(residuals[i]));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

FanDemo default_demo() {
  auto vars = divisor_vars(3);
  SparsePoly x0 = SparsePoly::variable("x0").aligned(vars);
  SparsePoly s(vars);
  for (int i = 1; i <= 3; ++i) s += SparsePoly::variable(vars[static_cast<std::size_t>(i)]).aligned(vars).pow(2);
  SparsePoly f = x0 * x0 - fraction(1, 4) * s;
  FanDemo demo{
      ZeroCycle::make({{{Rational(1), Rational(2), Rational(-1)}, 1}, {{Rational(3), Rational(-1), Rational(2)}, 1}}),
      Divisor::make(3, f),
      {fraction(1, 10), fraction(1, 100), fraction(1, 1000)}};
  return demo;
}

}  // namespace rct
