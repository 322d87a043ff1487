#include "rct/sturm.hpp"

#include <algorithm>

namespace rct {

std::vector<SparsePoly> SturmSeq::as_sparse(const std::string& var) const {
  std::vector<SparsePoly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.to_sparse(var));
  return out;
}

int SturmSeq::sign_changes_at(const Rational& a) const {
  std::vector<int> signs;
  signs.reserve(polys.size());
  for (const auto& p : polys) signs.push_back(p.sign_at(a));
  return sign_changes(signs);
}

int SturmSeq::sign_changes_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : polys) signs.push_back(sgn(p.leading_coefficient()));
  return sign_changes(signs);
}

int SturmSeq::sign_changes_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : polys) {
    int s = sgn(p.leading_coefficient());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(signs);
}

SturmSeq sturm_sequence(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("Sturm sequence of a constant polynomial");
  SturmSeq seq;
  seq.polys.push_back(f);
  seq.polys.push_back(f.derivative());
  for (;;) {
    const auto& prev = seq.polys[seq.polys.size() - 2];
    const auto& cur = seq.polys.back();
    auto rem = divmod(prev, cur).second;
    if (rem.is_zero()) break;
    seq.polys.push_back(-rem);
  }
  return seq;
}

SturmSeq sturm_sequence(const SparsePoly& f) {
  auto used = f.trimmed();
  if (used.vars().size() != 1) throw std::invalid_argument("Sturm sequence needs a univariate polynomial");
  return sturm_sequence(UniPoly::from_sparse(used, used.vars().front()));
}

int sign_changes(std::span<const int> signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_distinct_roots_in(const SturmSeq& seq, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("interval needs a < b");
  const auto& f = seq.polys.front();
  if (f(a) == 0) throw EndpointRootError(a);
  if (f(b) == 0) throw EndpointRootError(b);
  return seq.sign_changes_at(a) - seq.sign_changes_at(b);
}

int count_distinct_roots_in(const UniPoly& f, const Rational& a, const Rational& b) {
  return count_distinct_roots_in(sturm_sequence(f), a, b);
}

int count_distinct_roots_total(const SturmSeq& seq) {
  return seq.sign_changes_at_neg_infinity() - seq.sign_changes_at_pos_infinity();
}

int count_distinct_roots_total(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  return count_distinct_roots_total(sturm_sequence(f));
}

Rational cauchy_bound(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  const auto& c = f.coeffs();
  Rational lead = abs(c.back());
  Rational best(0);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) best = std::max(best, Rational(abs(c[k]) / lead));
  return best + 1;
}

namespace {

// Radius h such that p is the only root of f in [p - h, p + h] and p +- h
// are not roots. Requires f(p) == 0.
Rational isolating_radius(const SturmSeq& seq, const Rational& p, Rational h) {
  const auto& f = seq.polys.front();
  for (;;) {
    if (f(p - h) != 0 && f(p + h) != 0 && count_distinct_roots_in(seq, p - h, p + h) == 1) return h;
    h /= 2;
  }
}

}  // namespace

std::pair<Rational, Rational> nudge_endpoints(const UniPoly& f, const Rational& a, const Rational& b) {
  if (!(a <= b)) throw std::invalid_argument("interval needs a <= b");
  if (f.degree() < 1) return {a, b};
  auto seq = sturm_sequence(f);
  Rational start = b > a ? Rational((b - a) / 2) : Rational(1);
  Rational lo = a, hi = b;
  if (f(a) == 0) lo = a - isolating_radius(seq, a, start);
  if (f(b) == 0) hi = b + isolating_radius(seq, b, start);
  if (lo == hi) {
    // a == b and not a root: any small symmetric window without roots.
    Rational h = start;
    while (f(a - h) == 0 || f(a + h) == 0 || count_distinct_roots_in(seq, a - h, a + h) != 0) h /= 2;
    return {a - h, a + h};
  }
  return {lo, hi};
}

namespace {

// First of 1/2, 1/3, 2/3, 1/4, 3/4, ... of the way from a to b that is not a root.
Rational split_point(const UniPoly& f, const Rational& a, const Rational& b) {
  for (unsigned den = 2;; ++den)
    for (unsigned num = 1; num < den; ++num) {
      Rational m = a + (b - a) * Rational(num, den);
      if (f(m) != 0) return m;
    }
}

void bisect(const SturmSeq& seq, const Rational& a, int va, const Rational& b, int vb, const Rational& precision,
            std::vector<RootInterval>& out) {
  int count = va - vb;
  if (count == 0) return;
  if (count == 1 && b - a <= precision) {
    out.push_back({a, b});
    return;
  }
  const auto& f = seq.polys.front();
  Rational mid = (a + b) / 2;
  if (f(mid) == 0) {
    if (count == 1) {
      out.push_back({mid, mid});
      return;
    }
    mid = split_point(f, a, b);
  }
  int vm = seq.sign_changes_at(mid);
  bisect(seq, a, va, mid, vm, precision, out);
  bisect(seq, mid, vm, b, vb, precision, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots_bisection(const UniPoly& f, const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("isolation precision must be positive");
  if (f.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (f.degree() == 0) return out;
  auto seq = sturm_sequence(f);
  Rational bound = cauchy_bound(f);
  bisect(seq, -bound, seq.sign_changes_at(-bound), bound, seq.sign_changes_at(bound), precision, out);
  return out;
}

}  // namespace rct
