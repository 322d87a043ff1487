#include "rct/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rct {

namespace {

// Packed monomials: [total degree:16][e0:8][e1:8]...[e13:8], most significant
// first, so unsigned integer order equals graded-lex order and monomial
// multiplication is key addition as long as no field overflows.
using Key = unsigned __int128;
constexpr std::size_t kMaxPackedVars = 14;
constexpr Exponent kMaxPackedExp = 255;
constexpr Exponent kMaxPackedTotal = 65535;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x7F4A7C159E3779B9ull + (lo << 6) + (lo >> 2));
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

Key pack(const Monomial& m) {
  Exponent total = 0;
  Key key = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    total += m[i];
    key |= static_cast<Key>(m[i]) << (104 - 8 * i);
  }
  key |= static_cast<Key>(total) << 112;
  return key;
}

Monomial unpack(Key key, std::size_t nvars) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<Exponent>((key >> (104 - 8 * i)) & 0xFF);
  return m;
}

bool key_divides(Key divisor, Key dividend, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    auto shift = 104 - 8 * i;
    if (((divisor >> shift) & 0xFF) > ((dividend >> shift) & 0xFF)) return false;
  }
  return true;
}

struct DegreeProfile {
  std::vector<Exponent> per_var;
  Exponent total = 0;
};

DegreeProfile profile(const std::vector<Term>& terms, std::size_t nvars) {
  DegreeProfile p{std::vector<Exponent>(nvars, 0), 0};
  for (const auto& t : terms) {
    Exponent total = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      p.per_var[i] = std::max(p.per_var[i], t.exp[i]);
      total += t.exp[i];
    }
    p.total = std::max(p.total, total);
  }
  return p;
}

bool packable_product(const DegreeProfile& a, const DegreeProfile& b) {
  if (a.per_var.size() > kMaxPackedVars) return false;
  if (a.total + b.total > kMaxPackedTotal) return false;
  for (std::size_t i = 0; i < a.per_var.size(); ++i)
    if (a.per_var[i] + b.per_var[i] > kMaxPackedExp) return false;
  return true;
}

Exponent total_degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), Exponent{0}); }

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

std::vector<Term> terms_from_map(std::map<Monomial, Rational, GrlexGreater>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, std::move(c)});
  return out;
}

std::vector<Term> terms_from_keys(std::vector<std::pair<Key, Rational>>& entries, std::size_t nvars) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Term> out;
  out.reserve(entries.size());
  for (auto& [k, c] : entries)
    if (c != 0) out.push_back(Term{unpack(k, nvars), std::move(c)});
  return out;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = a.substr(i, ie - i);
      auto nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      // Equal values with different zero padding: shorter raw chunk first.
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  auto ta = total_degree_of(a);
  auto tb = total_degree_of(b);
  if (ta != tb) return ta > tb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  auto less = [](const std::string& x, const std::string& y) { return natural_less(x, y); };
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}

// ---------------------------------------------------------------------------

SparsePoly::SparsePoly(std::vector<std::string> vars) : SparsePoly(std::move(vars), {}) {}

SparsePoly::SparsePoly(std::vector<std::string> vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != vars.size()) throw std::invalid_argument("exponent vector length does not match variables");
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return natural_less(vars[x], vars[y]); });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (vars[order[i]] == vars[order[i - 1]]) throw std::invalid_argument("duplicate variable '" + vars[order[i]] + "'");
  std::vector<std::string> sorted;
  sorted.reserve(vars.size());
  for (auto idx : order) sorted.push_back(vars[idx]);

  std::map<Monomial, Rational, GrlexGreater> acc;
  for (auto& t : terms) {
    Monomial m(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) m[i] = t.exp[order[i]];
    acc[std::move(m)] += t.coeff;
  }
  vars_ = std::move(sorted);
  terms_ = terms_from_map(acc);
}

SparsePoly SparsePoly::from_sorted(std::vector<std::string> vars, std::vector<Term> terms) {
  SparsePoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  return p;
}

SparsePoly SparsePoly::constant(const Rational& c, std::vector<std::string> vars) {
  SparsePoly p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{Monomial(p.vars_.size(), 0), c});
  return p;
}

SparsePoly SparsePoly::variable(const std::string& name) {
  return from_sorted({name}, {Term{Monomial{1}, Rational(1)}});
}

bool SparsePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree_of(terms_.front().exp) == 0);
}

std::optional<std::size_t> SparsePoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

int SparsePoly::total_degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(total_degree_of(terms_.front().exp));
}

int SparsePoly::degree_in(std::string_view var) const {
  if (terms_.empty()) return kZeroDegree;
  auto idx = var_index(var);
  if (!idx) return 0;
  Exponent best = 0;
  for (const auto& t : terms_) best = std::max(best, t.exp[*idx]);
  return static_cast<int>(best);
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  auto deg = total_degree_of(terms_.front().exp);
  if (total_degree_of(terms_.back().exp) != deg) return std::nullopt;
  return static_cast<int>(deg);
}

Rational SparsePoly::coefficient(const Monomial& exp) const {
  if (exp.size() != vars_.size()) throw std::invalid_argument("exponent vector length does not match variables");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Monomial& m) { return grlex_greater(t.exp, m); });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return Rational(0);
}

Rational SparsePoly::constant_term() const {
  if (!terms_.empty() && total_degree_of(terms_.back().exp) == 0) return terms_.back().coeff;
  return Rational(0);
}

const Rational& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

SparsePoly SparsePoly::aligned(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      for (const auto& t : terms_)
        if (t.exp[i] != 0) throw std::invalid_argument("cannot drop occurring variable '" + vars_[i] + "'");
      position[i] = vars.size();
    } else {
      position[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  bool sorted = std::is_sorted(vars.begin(), vars.end(), [](const auto& x, const auto& y) { return natural_less(x, y); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(vars.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (position[i] < vars.size()) m[position[i]] = t.exp[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  if (!sorted) return SparsePoly(vars, std::move(out));
  // Relative order of the occurring variables is unchanged, so grlex order is too.
  return from_sorted(vars, std::move(out));
}

SparsePoly SparsePoly::trimmed() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& t : terms_)
      if (t.exp[i] != 0) {
        used.push_back(vars_[i]);
        break;
      }
  return aligned(used);
}

SparsePoly SparsePoly::with_vars(const std::vector<std::string>& extra) const {
  std::vector<std::string> sorted = extra;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return natural_less(x, y); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return aligned(merge_vars(vars_, sorted));
}

std::vector<SparsePoly> SparsePoly::coefficients_in(std::string_view var) const {
  std::vector<std::string> rest;
  for (const auto& v : vars_)
    if (v != var) rest.push_back(v);
  if (terms_.empty()) return {};
  auto idx = var_index(var);
  if (!idx) return {aligned(rest)};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& t : terms_) {
    Monomial m;
    m.reserve(rest.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != *idx) m.push_back(t.exp[i]);
    buckets[t.exp[*idx]].push_back(Term{std::move(m), t.coeff});
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  // Removing one coordinate keeps grlex order within a bucket except for
  // total-degree shifts, which are uniform per bucket.
  for (auto& b : buckets) out.push_back(from_sorted(rest, std::move(b)));
  return out;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
  if (terms_.empty()) return Rational(0);
  auto prof = profile(terms_, vars_.size());
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    powers[i].resize(prof.per_var[i] + 1);
    powers[i][0] = 1;
    for (Exponent e = 1; e <= prof.per_var[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  Rational sum(0);
  Rational term;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exp[i] != 0) term *= powers[i][t.exp[i]];
    sum += term;
  }
  return sum;
}

Rational SparsePoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> coords(vars_.size());
  auto prof = profile(terms_, vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) {
      coords[i] = it->second;
    } else if (prof.per_var[i] != 0) {
      throw std::invalid_argument("no value bound for variable '" + vars_[i] + "'");
    }
  }
  return evaluate(coords);
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& images) const {
  std::vector<std::string> kept;
  std::vector<std::string> out_vars;
  for (const auto& v : vars_)
    if (!images.count(v)) kept.push_back(v);
  out_vars = kept;
  for (const auto& [name, img] : images) out_vars = merge_vars(out_vars, img.vars());

  auto prof = profile(terms_, vars_.size());
  std::vector<std::vector<SparsePoly>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = images.find(vars_[i]);
    if (it == images.end()) continue;
    auto base = it->second.aligned(out_vars);
    powers[i].reserve(prof.per_var[i] + 1);
    powers[i].push_back(SparsePoly::constant(1, out_vars));
    for (Exponent e = 1; e <= prof.per_var[i]; ++e) powers[i].push_back(powers[i].back() * base);
  }

  std::map<Monomial, Rational, GrlexGreater> acc;
  for (const auto& t : terms_) {
    Monomial base(out_vars.size(), 0);
    SparsePoly factor = SparsePoly::constant(t.coeff, out_vars);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!powers[i].empty()) {
        factor = factor * powers[i][t.exp[i]];
      } else {
        auto pos = std::find(out_vars.begin(), out_vars.end(), vars_[i]) - out_vars.begin();
        base[static_cast<std::size_t>(pos)] += t.exp[i];
      }
    }
    for (const auto& ft : factor.terms()) {
      Monomial m = ft.exp;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += base[i];
      acc[std::move(m)] += ft.coeff;
    }
  }
  return from_sorted(out_vars, terms_from_map(acc));
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result = SparsePoly::constant(1, vars_);
  SparsePoly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) { return *this = *this + other; }
SparsePoly& SparsePoly::operator-=(const SparsePoly& other) { return *this = *this - other; }
SparsePoly& SparsePoly::operator*=(const SparsePoly& other) { return *this = *this * other; }

SparsePoly SparsePoly::add_impl(const SparsePoly& a, const SparsePoly& b, bool subtract) {
  auto vars = merge_vars(a.vars(), b.vars());
  SparsePoly x = a.aligned(vars);
  SparsePoly y = b.aligned(vars);
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  auto xi = x.terms_.begin(), xe = x.terms_.end();
  auto yi = y.terms_.begin(), ye = y.terms_.end();
  while (xi != xe || yi != ye) {
    if (yi == ye || (xi != xe && grlex_greater(xi->exp, yi->exp))) {
      out.push_back(*xi++);
    } else if (xi == xe || grlex_greater(yi->exp, xi->exp)) {
      out.push_back(Term{yi->exp, subtract ? Rational(-yi->coeff) : yi->coeff});
      ++yi;
    } else {
      Rational c = subtract ? Rational(xi->coeff - yi->coeff) : Rational(xi->coeff + yi->coeff);
      if (c != 0) out.push_back(Term{xi->exp, std::move(c)});
      ++xi;
      ++yi;
    }
  }
  return from_sorted(std::move(vars), std::move(out));
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return SparsePoly::add_impl(a, b, false); }
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return SparsePoly::add_impl(a, b, true); }

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
  if (c == 0) return SparsePoly(p.vars_);
  SparsePoly out = p;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  auto vars = merge_vars(a.vars_, b.vars_);
  if (a.is_zero() || b.is_zero()) return SparsePoly(vars);
  SparsePoly x = a.aligned(vars);
  SparsePoly y = b.aligned(vars);
  if (x.size() < y.size()) std::swap(x, y);
  const std::size_t n = vars.size();

  if (y.size() == 1) {
    // Multiplying by a single term preserves grlex order.
    const auto& s = y.terms_.front();
    std::vector<Term> out;
    out.reserve(x.size());
    for (const auto& t : x.terms_) {
      Monomial m = t.exp;
      for (std::size_t i = 0; i < n; ++i) m[i] += s.exp[i];
      out.push_back(Term{std::move(m), t.coeff * s.coeff});
    }
    return SparsePoly::from_sorted(std::move(vars), std::move(out));
  }

  auto px = profile(x.terms_, n);
  auto py = profile(y.terms_, n);
  if (packable_product(px, py)) {
    std::vector<Key> kx, ky;
    kx.reserve(x.size());
    ky.reserve(y.size());
    for (const auto& t : x.terms_) kx.push_back(pack(t.exp));
    for (const auto& t : y.terms_) ky.push_back(pack(t.exp));
    auto integral = [](const std::vector<Term>& ts) {
      return std::all_of(ts.begin(), ts.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
    };
    if (integral(x.terms_) && integral(y.terms_)) {
      // Integer accumulation avoids the gcd work of rational arithmetic.
      std::unordered_map<Key, Integer, KeyHash> acc;
      acc.reserve(std::min<std::size_t>(x.size() * y.size(), 1u << 22));
      for (std::size_t i = 0; i < x.size(); ++i) {
        mpz_srcptr ci = x.terms_[i].coeff.get_num_mpz_t();
        for (std::size_t j = 0; j < y.size(); ++j)
          mpz_addmul(acc[kx[i] + ky[j]].get_mpz_t(), ci, y.terms_[j].coeff.get_num_mpz_t());
      }
      std::vector<std::pair<Key, Rational>> entries;
      entries.reserve(acc.size());
      for (auto& [k, c] : acc)
        if (c != 0) entries.emplace_back(k, Rational(c));
      return SparsePoly::from_sorted(std::move(vars), terms_from_keys(entries, n));
    }
    std::unordered_map<Key, Rational, KeyHash> acc;
    acc.reserve(std::min<std::size_t>(x.size() * y.size(), 1u << 22));
    Rational prod;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& ci = x.terms_[i].coeff;
      for (std::size_t j = 0; j < y.size(); ++j) {
        mpq_mul(prod.get_mpq_t(), ci.get_mpq_t(), y.terms_[j].coeff.get_mpq_t());
        auto [it, inserted] = acc.try_emplace(kx[i] + ky[j]);
        if (inserted) {
          it->second.swap(prod);
        } else {
          it->second += prod;
        }
      }
    }
    std::vector<std::pair<Key, Rational>> entries;
    entries.reserve(acc.size());
    for (auto& [k, c] : acc) entries.emplace_back(k, std::move(c));
    return SparsePoly::from_sorted(std::move(vars), terms_from_keys(entries, n));
  }

  std::map<Monomial, Rational, GrlexGreater> acc;
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_) {
      Monomial m = s.exp;
      for (std::size_t i = 0; i < n; ++i) m[i] += t.exp[i];
      acc[std::move(m)] += s.coeff * t.coeff;
    }
  return SparsePoly::from_sorted(std::move(vars), terms_from_map(acc));
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.size() != b.size()) return false;
  if (a.vars_ == b.vars_) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  return (a - b).is_zero();
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree_of(t.exp) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out << rct::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (wrote) out << '*';
      out << vars_[i];
      if (t.exp[i] != 1) out << '^' << t.exp[i];
      wrote = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

template <class K, class Cmp, class Divides, class Sub, class Add>
std::optional<std::vector<std::pair<K, Rational>>> long_divide(std::vector<std::pair<K, Rational>> num,
                                                               const std::vector<std::pair<K, Rational>>& den,
                                                               Divides divides, Sub sub, Add add) {
  std::map<K, Rational, Cmp> rem;
  for (auto& [k, c] : num) rem.emplace(std::move(k), std::move(c));
  const auto& [lead_key, lead_coeff] = den.front();
  std::vector<std::pair<K, Rational>> quotient;
  Rational factor, prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lead_key, top->first)) return std::nullopt;
    K shift = sub(top->first, lead_key);
    factor = top->second / lead_coeff;
    rem.erase(top);
    for (std::size_t j = 1; j < den.size(); ++j) {
      mpq_mul(prod.get_mpq_t(), factor.get_mpq_t(), den[j].second.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(add(den[j].first, shift));
      if (inserted) {
        it->second = -prod;
      } else {
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.emplace_back(std::move(shift), factor);
  }
  return quotient;
}

}  // namespace

std::optional<SparsePoly> divide_exact(const SparsePoly& num, const SparsePoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto vars = merge_vars(num.vars_, den.vars_);
  if (num.is_zero()) return SparsePoly(vars);
  SparsePoly a = num.aligned(vars);
  SparsePoly b = den.aligned(vars);
  const std::size_t n = vars.size();
  auto pa = profile(a.terms_, n);

  if (n <= kMaxPackedVars && pa.total <= kMaxPackedTotal &&
      std::all_of(pa.per_var.begin(), pa.per_var.end(), [](Exponent e) { return e <= kMaxPackedExp; })) {
    auto pb = profile(b.terms_, n);
    for (std::size_t i = 0; i < n; ++i)
      if (pb.per_var[i] > pa.per_var[i]) return std::nullopt;
    std::vector<std::pair<Key, Rational>> kn, kd;
    for (const auto& t : a.terms_) kn.emplace_back(pack(t.exp), t.coeff);
    for (const auto& t : b.terms_) kd.emplace_back(pack(t.exp), t.coeff);
    auto q = long_divide<Key, std::greater<Key>>(
        std::move(kn), kd, [n](Key d, Key x) { return key_divides(d, x, n); },
        [](Key x, Key y) { return x - y; }, [](Key x, Key y) { return x + y; });
    if (!q) return std::nullopt;
    return SparsePoly::from_sorted(std::move(vars), terms_from_keys(*q, n));
  }

  std::vector<std::pair<Monomial, Rational>> mn, md;
  for (const auto& t : a.terms_) mn.emplace_back(t.exp, t.coeff);
  for (const auto& t : b.terms_) md.emplace_back(t.exp, t.coeff);
  auto q = long_divide<Monomial, GrlexGreater>(
      std::move(mn), md,
      [n](const Monomial& d, const Monomial& x) {
        for (std::size_t i = 0; i < n; ++i)
          if (d[i] > x[i]) return false;
        return true;
      },
      [n](const Monomial& x, const Monomial& y) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = x[i] - y[i];
        return m;
      },
      [n](const Monomial& x, const Monomial& y) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = x[i] + y[i];
        return m;
      });
  if (!q) return std::nullopt;
  std::vector<Term> out;
  for (auto& [m, c] : *q) out.push_back(Term{std::move(m), std::move(c)});
  return SparsePoly::from_sorted(std::move(vars), std::move(out));
}

SparsePoly primitive_part(const SparsePoly& p, Rational* removed) {
  if (p.is_zero()) {
    if (removed) *removed = 1;
    return p;
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (removed) *removed = content;
  return Rational(1 / content) * p;
}

bool projectively_equal(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto vars = merge_vars(a.vars(), b.vars());
  auto x = a.aligned(vars);
  auto y = b.aligned(vars);
  if (x.size() != y.size()) return false;
  Rational ratio = x.leading_coefficient() / y.leading_coefficient();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& s = x.terms()[i];
    const auto& t = y.terms()[i];
    if (s.exp != t.exp || s.coeff != ratio * t.coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

int shd_weight(std::string_view var) {
  std::size_t pos = var.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(var[pos - 1]))) --pos;
  if (pos == var.size() || pos == 0)
    throw std::invalid_argument("coefficient variable '" + std::string(var) + "' has no index suffix");
  return std::stoi(std::string(var.substr(pos)));
}

int shd(const Monomial& exp, const std::vector<std::string>& vars) {
  if (exp.size() != vars.size()) throw std::invalid_argument("exponent vector length does not match variables");
  int total = 0;
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] != 0) total += shd_weight(vars[i]) * static_cast<int>(exp[i]);
  return total;
}

std::optional<int> ShdValue::value() const {
  if (kind_ == Kind::Value) return value_;
  return std::nullopt;
}

ShdValue substituted_degree(const SparsePoly& p) {
  if (p.is_zero()) return ShdValue::any();
  int first = shd(p.terms().front().exp, p.vars());
  for (const auto& t : p.terms())
    if (shd(t.exp, p.vars()) != first) return ShdValue::inhomogeneous();
  return ShdValue::of(first);
}

SparsePoly substitute_graded(const SparsePoly& f, const std::vector<SparsePoly>& g) {
  auto degree = substituted_degree(f);
  if (!degree.is_homogeneous()) throw std::invalid_argument("polynomial is not substitutable-homogeneous");
  std::vector<std::string> out_vars;
  for (const auto& gi : g) out_vars = merge_vars(out_vars, gi.vars());
  if (f.is_zero()) return SparsePoly(out_vars);

  std::map<std::string, SparsePoly> images;
  auto used = f.trimmed();
  for (const auto& var : used.vars()) {
    int w = shd_weight(var);
    if (w < 1 || static_cast<std::size_t>(w) > g.size())
      throw std::invalid_argument("no graded image supplied for '" + var + "'");
    const auto& gi = g[static_cast<std::size_t>(w - 1)];
    if (!gi.is_zero() && gi.homogeneous_degree() != w)
      throw std::invalid_argument("image of '" + var + "' must be homogeneous of degree " + std::to_string(w));
    images.emplace(var, gi);
  }
  auto result = used.substitute(images).aligned(merge_vars(out_vars, {}));
  if (!result.is_zero() && result.homogeneous_degree() != *degree.value())
    throw std::logic_error("graded substitution produced a non-homogeneous result");
  return result;
}

}  // namespace rct
