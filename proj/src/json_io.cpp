#include "rct/json_io.hpp"

#include "rct/parse.hpp"

#include <stdexcept>

namespace rct {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(rational_to_json(c));
  return a;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

Json poly_to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coeff", rational_to_json(t.coeff)}, {"exp", t.exp}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

SparsePoly poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  auto vars = field(j, "vars").get<std::vector<std::string>>();
  std::vector<Term> terms;
  for (const auto& t : field(j, "terms")) {
    auto exp = field(t, "exp").get<std::vector<long>>();
    if (exp.size() != vars.size()) throw std::invalid_argument("exponent vector length differs from vars");
    Monomial m;
    for (long e : exp) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      m.push_back(static_cast<Exponent>(e));
    }
    terms.push_back(Term{std::move(m), rational_from_json(field(t, "coeff"))});
  }
  return SparsePoly(std::move(vars), std::move(terms));
}

Json unipoly_to_json(const UniPoly& p, const std::string& var) { return poly_to_json(p.to_sparse(var)); }

Json mhform_to_json(const MHForm& F) {
  return {{"N", F.N}, {"r", F.r}, {"d", F.d}, {"m", F.m}, {"form", poly_to_json(F.form)}};
}

MHForm mhform_from_json(const Json& j) {
  return MHForm::make(int_field(j, "N"), int_field(j, "r"), int_field(j, "d"), int_field(j, "m"),
                      poly_from_json(field(j, "form")));
}

Json divisor_to_json(const Divisor& D) {
  return {{"n", D.n}, {"d", D.d}, {"normalized", D.normalized}, {"f", poly_to_json(D.f)}};
}

Divisor divisor_from_json(const Json& j) { return Divisor::make(int_field(j, "n"), poly_from_json(field(j, "f"))); }

Json cycle_to_json(const ZeroCycle& Z) {
  Json pts = Json::array();
  for (const auto& [p, m] : Z.points) pts.push_back({{"coords", point_to_json(p)}, {"mult", m}});
  return {{"N", Z.N}, {"points", pts}};
}

ZeroCycle cycle_from_json(const Json& j) {
  std::vector<std::pair<Point, int>> pts;
  for (const auto& e : field(j, "points")) {
    Point p;
    for (const auto& c : field(e, "coords")) p.push_back(rational_from_json(c));
    int mult = e.contains("mult") ? int_field(e, "mult") : 1;
    pts.emplace_back(std::move(p), mult);
  }
  ZeroCycle Z = ZeroCycle::make(std::move(pts));
  if (j.contains("N") && int_field(j, "N") != Z.N) throw std::invalid_argument("\"N\" disagrees with the coordinates");
  return Z;
}

Json float_cycle_to_json(const FloatCycle& Z) {
  Json pts = Json::array();
  for (const auto& [p, m] : Z.points) pts.push_back({{"coords", p}, {"mult", m}});
  return {{"N", Z.N}, {"points", pts}};
}

Json critical_set_to_json(const CriticalSet& cs) {
  Json list = Json::array();
  for (int j = 2; j <= cs.d; ++j) {
    auto idx = static_cast<std::size_t>(j - 2);
    Json w = Json::array();
    for (const auto& f : cs.w[idx]) w.push_back({{"F", f.index}, {"exponent", f.exponent}});
    list.push_back({{"j", j},
                    {"F", poly_to_json(cs.F[idx])},
                    {"text", cs.F[idx].to_string()},
                    {"w", w},
                    {"scale", rational_to_json(cs.scale[idx])}});
  }
  return {{"d", cs.d}, {"critical", list}};
}

Json gcheck_to_json(const GCheck& g) {
  return {{"g", unipoly_to_json(g.g, "t")},
          {"g_at_1", rational_to_json(g.at_one)},
          {"roots_in_open_0_1", g.roots_in_open},
          {"holds", g.holds}};
}

Json membership_to_json(const MembershipReport& rep, bool verbose) {
  Json j{{"set", to_string(rep.set)},
         {"verdict", to_string(rep.verdict)},
         {"mode", to_string(rep.mode)},
         {"samples", rep.samples},
         {"failed_samples", rep.failed_samples},
         {"route_checked", rep.route_checked},
         {"route_disagreements", rep.route_disagreements}};
  j["witness"] = rep.witness ? point_to_json(*rep.witness) : Json(nullptr);
  j["witness_count"] = rep.witness_count ? Json(*rep.witness_count) : Json(nullptr);
  if (rep.critical_route_positive) j["critical_route_positive"] = *rep.critical_route_positive;
  if (rep.g_check) j["g_check"] = gcheck_to_json(*rep.g_check);
  if (verbose) {
    Json certs = Json::array();
    for (const auto& c : rep.certificates) certs.push_back({{"x", point_to_json(c.x)}, {"count", c.count}});
    j["certificates"] = certs;
  }
  return j;
}

Json margin_to_json(const Margin& m) {
  return {{"n", m.n}, {"k", m.k}, {"M", m.M.get_str()}, {"epsilon", rational_to_json(m.epsilon)}};
}

Json fan_to_json(const FanResult& r, bool verbose) {
  Json j{{"t", rational_to_json(r.t)},
         {"degree", r.output.degree()},
         {"output", float_cycle_to_json(r.output)},
         {"residual", r.residual}};
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json e{{"point", f.point}, {"sturm_count", f.sturm_count}};
    if (verbose) e["roots"] = f.roots;
    fibers.push_back(e);
  }
  j["fibers"] = fibers;
  return j;
}

Json intervals_to_json(const std::vector<RootInterval>& ivs) {
  Json a = Json::array();
  for (const auto& iv : ivs) a.push_back(Json::array({rational_to_json(iv.lo), rational_to_json(iv.hi)}));
  return a;
}

}  // namespace rct
