#include "rct/cli.hpp"

#include "rct/chow.hpp"
#include "rct/critical.hpp"
#include "rct/divisors.hpp"
#include "rct/json_io.hpp"
#include "rct/magic_fan.hpp"
#include "rct/parse.hpp"
#include "rct/sturm.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rct::cli {

namespace {

// Raised for bad input that CLI11 itself cannot see.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) {
    if (part.empty()) throw UsageError("empty entry in list \"" + s + "\"");
    out.push_back(parse_rational(part));
  }
  return out;
}

Matrix matrix_arg(const std::string& s) {
  Matrix m;
  for (const auto& row : split(s, ';')) m.push_back(rational_list(row));
  return m;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

UniPoly univariate_arg(const std::string& text) {
  SparsePoly p = parse_poly(text).trimmed();
  if (p.vars().size() > 1) throw UsageError("expected a univariate polynomial");
  if (p.vars().empty()) throw UsageError("expected a non-constant polynomial");
  return UniPoly::from_sparse(p, p.vars().front());
}

bool is_poly_json(const Json& j) { return j.is_object() && j.contains("vars") && j.contains("terms") && j.size() == 2; }

void render_text(const Json& j, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    out << pad << key << ":";
    if (is_poly_json(v)) {
      out << ' ' << poly_from_json(v).to_string() << '\n';
    } else if (v.is_object()) {
      out << '\n';
      render_text(v, out, indent + 2);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
      out << '\n';
      for (const auto& e : v) {
        if (e.is_object() && !is_poly_json(e)) {
          out << pad << "  -\n";
          render_text(e, out, indent + 4);
        } else if (is_poly_json(e)) {
          out << pad << "  - " << poly_from_json(e).to_string() << '\n';
        } else {
          out << pad << "  - " << e.dump() << '\n';
        }
      }
    } else {
      out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

struct Output {
  std::ostream& out;
  bool json = false;
  void emit(const Json& j) const {
    if (json)
      out << j.dump(2) << '\n';
    else
      render_text(j, out, 0);
  }
};

// Divisor from --divisor FILE or --poly EXPR -n N.
struct DivisorArgs {
  std::string file;
  std::string poly;
  int n = 0;
  void add(CLI::App* app) {
    app->add_option("--divisor", file, "divisor JSON file");
    app->add_option("--poly", poly, "divisor polynomial in x0..xn");
    app->add_option("-n", n, "projective dimension for --poly");
  }
  Divisor get() const {
    if (!file.empty()) return divisor_from_json(read_json_file(file));
    if (poly.empty()) throw UsageError("give --divisor FILE or --poly EXPR -n N");
    if (n < 1) throw UsageError("--poly needs -n >= 1");
    return Divisor::make(n, parse_poly(poly));
  }
  Divisor normalized() const {
    auto [ok, D] = in_div_prime(get());
    if (!ok) throw UsageError("divisor is not in Div' (no x0^d term)");
    return *D;
  }
};

std::vector<Point> point_args(const std::vector<std::string>& pts) {
  std::vector<Point> out;
  for (const auto& p : pts) out.push_back(rational_list(p));
  return out;
}

Json suspension_to_json(const SuspensionReport& r) {
  return {{"suspension", r.suspension},
          {"eigenform_degree", r.s ? Json(*r.s) : Json(nullptr)},
          {"expected", r.expected},
          {"inconsistent", r.inconsistent}};
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  bool json = false, verbose = false;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--verbose", verbose, "include certificates");
  app.require_subcommand(1);
  app.fallthrough();

  // sturm
  auto* sturm = app.add_subcommand("sturm", "real root counting");
  sturm->require_subcommand(1);
  std::string poly_text, prec_text = "1/1000000000000";
  std::vector<std::string> interval;
  auto* s_count = sturm->add_subcommand("count", "distinct real roots");
  s_count->add_option("--poly", poly_text, "univariate polynomial")->required();
  s_count->add_option("--interval", interval, "open interval a b")->expected(2);
  auto* s_iso = sturm->add_subcommand("isolate", "isolating intervals");
  s_iso->add_option("--poly", poly_text, "univariate polynomial")->required();
  s_iso->add_option("--prec", prec_text, "interval width")->capture_default_str();

  // critical
  auto* crit = app.add_subcommand("critical", "critical polynomials");
  crit->require_subcommand(1);
  int degree = 0, max_degree = kDefaultMaxDegree;
  std::string coeffs_text;
  auto* c_gen = crit->add_subcommand("gen", "F_2..F_d");
  c_gen->add_option("-d", degree, "degree")->required();
  c_gen->add_option("--max-degree", max_degree, "largest supported degree")->capture_default_str();
  auto* c_test = crit->add_subcommand("test", "sign test for x^d + a1 x^{d-1} + ... + ad");
  c_test->add_option("-d", degree, "degree")->required();
  c_test->add_option("--coeffs", coeffs_text, "a1, ..., ad")->required();
  c_test->add_option("--max-degree", max_degree, "largest supported degree")->capture_default_str();

  // chow
  auto* chow = app.add_subcommand("chow", "Chow forms");
  chow->require_subcommand(1);
  std::vector<std::string> points;
  std::string mult_text, form_file, t_text, matrix_text;
  int split_index = 0;
  bool proper = false;
  auto* ch_points = chow->add_subcommand("points", "Chow form of a 0-cycle");
  ch_points->add_option("--point", points, "coordinates a,b,c (repeat)")->required();
  ch_points->add_option("--mult", mult_text, "multiplicities k1,k2,...");
  ch_points->add_option("-m", split_index, "split index")->capture_default_str();
  auto* ch_line = chow->add_subcommand("line", "Chow form of a linear span");
  ch_line->add_option("--point", points, "spanning points (repeat)")->required();
  ch_line->add_option("-m", split_index, "split index")->capture_default_str();
  auto* ch_eigen = chow->add_subcommand("eigen", "t-expansion and eigenform degree");
  ch_eigen->add_option("--form", form_file, "MHForm JSON file")->required();
  auto* ch_susp = chow->add_subcommand("suspension", "suspension test");
  ch_susp->add_option("--form", form_file, "MHForm JSON file")->required();
  ch_susp->add_flag("--proper", proper, "the caller asserts proper intersection");
  auto* ch_taffy = chow->add_subcommand("taffy", "taffy homotopy H(t)");
  ch_taffy->add_option("--form", form_file, "MHForm JSON file")->required();
  ch_taffy->add_option("--t", t_text, "evaluate at t (otherwise print coefficients)");
  auto* ch_det = chow->add_subcommand("detcheck", "F(Au) = det(A)^d F(u)");
  ch_det->add_option("--form", form_file, "MHForm JSON file")->required();
  ch_det->add_option("--matrix", matrix_text, "rows separated by ';'")->required();

  // div
  auto* div = app.add_subcommand("div", "divisors");
  div->require_subcommand(1);
  DivisorArgs dargs;
  int family_k = 0, grid = 0, threads = 0, perturb = 0;
  std::uint64_t seed = 1;
  bool times_x0 = false;
  std::string delta_text;
  auto* d_norm = div->add_subcommand("normalize", "Div' membership and normal form");
  dargs.add(d_norm);
  auto* d_scale = div->add_subcommand("scale", "f_t");
  dargs.add(d_scale);
  d_scale->add_option("--t", t_text, "t")->required();
  auto* d_family = div->add_subcommand("family", "prod (x0^2 - j |x|^2)");
  d_family->add_option("-n", dargs.n, "projective dimension")->required();
  d_family->add_option("-k", family_k, "number of factors")->required();
  d_family->add_flag("--x0", times_x0, "multiply by x0");
  auto* d_ine = div->add_subcommand("in-e", "membership in E");
  dargs.add(d_ine);
  d_ine->add_option("--grid", grid, "sample count (0 = default)");
  d_ine->add_option("--threads", threads, "worker threads (0 = RCT_THREADS or all cores)");
  auto* d_in2 = div->add_subcommand("in-div2", "membership in Div''");
  dargs.add(d_in2);
  d_in2->add_option("--grid", grid, "sample count (0 = default)");
  d_in2->add_option("--threads", threads, "worker threads");
  auto* d_margin = div->add_subcommand("margin", "positivity margins");
  dargs.add(d_margin);
  d_margin->add_option("--delta", delta_text, "with --poly H -n N: margin for H >= delta |x|^k");
  d_margin->add_option("--perturb", perturb, "openness check with this many perturbations");
  d_margin->add_option("--seed", seed, "perturbation seed")->capture_default_str();
  d_margin->add_option("--grid", grid, "sample count (0 = default)");

  // fan
  auto* fan = app.add_subcommand("fan", "magic fan");
  fan->require_subcommand(1);
  std::string cycle_file, divisor_file, limit_text;
  auto* f_demo = fan->add_subcommand("demo", "psi_tD on a 0-cycle");
  f_demo->add_option("--cycle", cycle_file, "ZeroCycle JSON (default: built-in demo)");
  f_demo->add_option("--divisor", divisor_file, "Divisor JSON (default: built-in demo)");
  f_demo->add_option("--t", t_text, "single t in (0, 1]");
  f_demo->add_option("--limit", limit_text, "decreasing t1,t2,...");
  f_demo->add_option("--threads", threads, "worker threads");

  // corpus
  std::string corpus_dir;
  bool update = false;
  auto* corpus = app.add_subcommand("corpus", "run golden command corpus");
  corpus->add_option("dir", corpus_dir, "corpus directory")->required();
  corpus->add_flag("--update", update, "rewrite expected outputs");

  std::vector<const char*> argv{"rct"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output o{out, json};

  if (*s_count) {
    UniPoly f = univariate_arg(poly_text);
    SturmSeq seq = sturm_sequence(f);
    Json j;
    if (interval.empty()) {
      j["count"] = count_distinct_roots_total(seq);
    } else {
      Rational a = parse_rational(interval[0]), b = parse_rational(interval[1]);
      if (!(a < b)) throw UsageError("interval needs a < b");
      j["interval"] = {rational_to_json(a), rational_to_json(b)};
      j["count"] = count_distinct_roots_in(seq, a, b);
    }
    j["sequence_length"] = seq.polys.size();
    if (verbose) {
      Json s = Json::array();
      for (const auto& p : seq.polys) s.push_back(unipoly_to_json(p));
      j["sequence"] = s;
    }
    o.emit(j);
    return 0;
  }
  if (*s_iso) {
    UniPoly f = univariate_arg(poly_text);
    Rational prec = parse_rational(prec_text);
    if (prec <= 0) throw UsageError("--prec must be positive");
    auto ivs = isolate_roots_bisection(f, prec);
    o.emit({{"count", ivs.size()}, {"intervals", intervals_to_json(ivs)}});
    return 0;
  }
  if (*c_gen) {
    if (degree < 2 || degree > max_degree) throw UsageError("-d must lie in 2..max-degree");
    o.emit(critical_set_to_json(critical_polynomials(degree, max_degree)));
    return 0;
  }
  if (*c_test) {
    auto a = rational_list(coeffs_text);
    if (static_cast<int>(a.size()) != degree) throw UsageError("--coeffs needs exactly d entries");
    if (degree < 1 || degree > max_degree) throw UsageError("-d must lie in 1..max-degree");
    RootVerdict v = has_d_distinct_real_roots(a, max_degree);
    int count = count_distinct_roots_total(monic_from_coefficients(a));
    Json j{{"d", degree}, {"verdict", to_string(v)}, {"sturm_count", count}};
    if (verbose && degree >= 2) {
      const auto& cs = critical_polynomials(degree, max_degree);
      Json signs = Json::array();
      for (const auto& F : cs.F) signs.push_back(sign(F.evaluate(a)));
      j["signs"] = signs;
    }
    o.emit(j);
    return v == RootVerdict::yes ? 0 : 1;
  }
  if (*ch_points) {
    auto pts = point_args(points);
    std::vector<int> mult(pts.size(), 1);
    if (!mult_text.empty()) {
      auto parts = split(mult_text, ',');
      if (parts.size() != pts.size()) throw UsageError("--mult needs one entry per point");
      for (std::size_t i = 0; i < parts.size(); ++i) mult[i] = std::stoi(parts[i]);
    }
    std::vector<std::pair<Point, int>> cyc;
    for (std::size_t i = 0; i < pts.size(); ++i) cyc.emplace_back(pts[i], mult[i]);
    o.emit(mhform_to_json(chow_of_points(cyc, split_index)));
    return 0;
  }
  if (*ch_line) {
    o.emit(mhform_to_json(chow_of_linear(point_args(points), split_index)));
    return 0;
  }
  if (*ch_eigen) {
    MHForm F = mhform_from_json(read_json_file(form_file));
    TExpansion e = t_expand(F);
    auto s = eigenform_degree(F);
    Json g = Json::array();
    for (std::size_t k = 0; k < e.g.size(); ++k)
      if (!e.g[k].is_zero()) g.push_back({{"power", k}, {"g", poly_to_json(e.g[k])}});
    o.emit({{"eigenform_degree", s ? Json(*s) : Json(nullptr)}, {"L", e.L}, {"bound_ok", e.bound_ok}, {"expansion", g}});
    return s ? 0 : 1;
  }
  if (*ch_susp) {
    auto r = suspension_report(mhform_from_json(read_json_file(form_file)), proper);
    o.emit(suspension_to_json(r));
    return r.suspension ? 0 : 1;
  }
  if (*ch_taffy) {
    MHForm F = mhform_from_json(read_json_file(form_file));
    Taffy H(F);
    if (!t_text.empty()) {
      MHForm Ht = H.at(parse_rational(t_text));
      o.emit({{"t", t_text}, {"H", mhform_to_json(Ht)}, {"suspension", is_suspension(Ht)}});
    } else {
      Json c = Json::array();
      for (const auto& h : H.coefficients()) c.push_back(poly_to_json(h));
      o.emit({{"top", (F.m + 1) * F.d}, {"coefficients", c}, {"constant", H.is_constant()}});
    }
    return 0;
  }
  if (*ch_det) {
    MHForm F = mhform_from_json(read_json_file(form_file));
    Matrix A = matrix_arg(matrix_text);
    bool ok = det_action_check(F, A);
    o.emit({{"holds", ok}, {"det", rational_to_json(determinant(A))}, {"d", F.d}});
    return ok ? 0 : 1;
  }
  if (*d_norm) {
    auto [ok, D] = in_div_prime(dargs.get());
    o.emit({{"in_div_prime", ok}, {"divisor", D ? divisor_to_json(*D) : Json(nullptr)}});
    return ok ? 0 : 1;
  }
  if (*d_scale) {
    o.emit(divisor_to_json(scale_divisor(dargs.normalized(), parse_rational(t_text))));
    return 0;
  }
  if (*d_family) {
    auto [G, xG] = paper_family(dargs.n, family_k);
    o.emit(divisor_to_json(times_x0 ? xG : G));
    return 0;
  }
  if (*d_ine || *d_in2) {
    Divisor D = dargs.normalized();
    SampleOptions opts{grid, threads, verbose};
    MembershipReport r = *d_ine ? in_E(D, opts) : in_div_double_prime(D, opts);
    o.emit(membership_to_json(r, verbose));
    return r.verdict == Verdict::non_member ? 1 : 0;
  }
  if (*d_margin) {
    if (!delta_text.empty()) {
      if (dargs.poly.empty() || dargs.n < 1) throw UsageError("--delta needs --poly H and -n N");
      o.emit(margin_to_json(positivity_margin(parse_poly(dargs.poly), parse_rational(delta_text), dargs.n)));
      return 0;
    }
    Divisor D = dargs.normalized();
    auto dirs = sphere_directions(D.n, grid > 0 ? grid : default_sample_count(D.n));
    auto H = critical_forms(D);
    Json forms = Json::array();
    bool positive = true;
    for (std::size_t i = 0; i < H.size(); ++i) {
      double mn = sampled_sphere_minimum(H[i], D.n, dirs);
      positive = positive && mn > 0;
      forms.push_back({{"j", i + 2}, {"H", poly_to_json(H[i])}, {"sampled_minimum", mn}});
    }
    Json j{{"forms", forms}, {"positive_on_grid", positive}};
    if (perturb > 0 && positive) {
      auto rep = openness_check(D, perturb, seed, dirs);
      Json eps = Json::array();
      for (const auto& e : rep.epsilons) eps.push_back(rational_to_json(e));
      j["openness"] = {{"perturbations", rep.perturbations}, {"preserved", rep.preserved}, {"epsilons", eps}};
    }
    o.emit(j);
    return positive ? 0 : 1;
  }
  if (*f_demo) {
    FanDemo demo = default_demo();
    ZeroCycle Z = cycle_file.empty() ? demo.Z : cycle_from_json(read_json_file(cycle_file));
    Divisor D = demo.D;
    if (!divisor_file.empty()) {
      auto [ok, N] = in_div_prime(divisor_from_json(read_json_file(divisor_file)));
      if (!ok) throw UsageError("divisor is not in Div'");
      D = *N;
    }
    try {
      if (!t_text.empty() && limit_text.empty()) {
        o.emit(fan_to_json(psi_demo(Z, D, parse_rational(t_text), threads), verbose));
        return 0;
      }
      std::vector<Rational> ts = limit_text.empty() ? demo.ts : rational_list(limit_text);
      Json results = Json::array();
      std::vector<double> residuals;
      for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i] < ts[i - 1])) throw UsageError("--limit must be strictly decreasing");
      for (const auto& t : ts) {
        FanResult r = psi_demo(Z, D, t, threads);
        residuals.push_back(r.residual);
        results.push_back(fan_to_json(r, verbose));
      }
      bool decreasing = true;
      for (std::size_t i = 1; i < residuals.size(); ++i) decreasing = decreasing && residuals[i] < residuals[i - 1];
      Json tj = Json::array();
      for (const auto& t : ts) tj.push_back(rational_to_json(t));
      Json j{{"cycle", cycle_to_json(Z)}, {"divisor", divisor_to_json(D)}, {"t", tj}, {"residuals", residuals}};
      j["strictly_decreasing"] = decreasing;
      if (ts.size() >= 2) {
        double slope = loglog_slope(ts, residuals);
        j["loglog_slope"] = std::isfinite(slope) ? Json(slope) : Json(nullptr);
      }
      j["results"] = results;
      o.emit(j);
      return 0;
    } catch (const FiberError& e) {
      o.emit({{"error", e.what()}, {"point", e.point()}, {"sturm_count", e.count()}});
      return 1;
    }
  }
  if (*corpus) {
    auto cases = run_corpus(corpus_dir, update);
    Json list = Json::array();
    int failed = 0;
    for (const auto& c : cases) {
      Json e{{"name", c.name}, {"ok", c.ok}};
      if (!c.ok) {
        e["diff"] = c.diff;
        ++failed;
      }
      list.push_back(e);
    }
    o.emit({{"cases", list}, {"failed", failed}});
    return failed == 0 ? 0 : 1;
  }
  return 2;
}

bool numbers_close(const Json& a, const Json& b, double tol, std::string& where) {
  if (a.is_number_float() || b.is_number_float()) {
    if (!a.is_number() || !b.is_number()) return false;
    double x = a.get<double>(), y = b.get<double>();
    if (std::abs(x - y) <= tol * std::max(1.0, std::abs(y))) return true;
    where = a.dump() + " vs " + b.dump();
    return false;
  }
  if (a.type() != b.type()) {
    where = a.dump() + " vs " + b.dump();
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      where = "object keys differ";
      return false;
    }
    for (const auto& [k, v] : a.items()) {
      if (!b.contains(k)) {
        where = "missing key " + k;
        return false;
      }
      if (!numbers_close(v, b.at(k), tol, where)) {
        where = k + "." + where;
        return false;
      }
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      where = "array lengths differ";
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!numbers_close(a[i], b[i], tol, where)) {
        where = "[" + std::to_string(i) + "]." + where;
        return false;
      }
    return true;
  }
  if (a != b) {
    where = a.dump() + " vs " + b.dump();
    return false;
  }
  return true;
}

std::string first_line_diff(const std::string& got, const std::string& want) {
  auto g = split(got, '\n'), w = split(want, '\n');
  for (std::size_t i = 0; i < std::max(g.size(), w.size()); ++i) {
    std::string a = i < g.size() ? g[i] : "<eof>", b = i < w.size() ? w[i] : "<eof>";
    if (a != b) return "line " + std::to_string(i + 1) + ": got '" + a + "', expected '" + b + "'";
  }
  return "outputs differ";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact real root counting, critical polynomials, Chow forms and divisors", "rct"};
  try {
    return dispatch(app, args, out, err);
  } catch (const FiberError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

std::vector<CorpusCase> run_corpus(const std::filesystem::path& dir, bool update) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir.string());
  std::vector<fs::path> cases_found;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") cases_found.push_back(e.path());
  std::sort(cases_found.begin(), cases_found.end());

  std::vector<CorpusCase> out;
  for (const auto& case_path : cases_found) {
    CorpusCase c;
    c.name = case_path.stem().string();
    Json meta = read_json_file(case_path.string());
    auto args = meta.at("args").get<std::vector<std::string>>();
    int want_exit = meta.value("exit", 0);
    std::optional<double> tol;
    if (meta.contains("tolerance")) tol = meta.at("tolerance").get<double>();

    // Relative file arguments resolve against the corpus directory.
    for (auto& a : args)
      if (a.size() > 5 && a.substr(a.size() - 5) == ".json" && fs::exists(dir / a)) a = (dir / a).string();

    std::ostringstream got, errs;
    int code = run(args, got, errs);
    fs::path out_path = case_path;
    out_path.replace_extension(".out");
    if (update) {
      std::ofstream(out_path) << got.str();
      c.ok = code == want_exit;
      if (!c.ok) c.diff = "exit " + std::to_string(code) + ", expected " + std::to_string(want_exit);
      out.push_back(c);
      continue;
    }
    std::ifstream in(out_path);
    std::stringstream want;
    want << in.rdbuf();
    if (!in) {
      c.diff = "missing " + out_path.filename().string();
    } else if (code != want_exit) {
      c.diff = "exit " + std::to_string(code) + ", expected " + std::to_string(want_exit) + " " + errs.str();
    } else if (!tol) {
      if (got.str() == want.str())
        c.ok = true;
      else
        c.diff = first_line_diff(got.str(), want.str());
    } else {
      try {
        std::string where;
        c.ok = numbers_close(Json::parse(got.str()), Json::parse(want.str()), *tol, where);
        if (!c.ok) c.diff = where;
      } catch (const Json::exception& e) {
        c.diff = e.what();
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace rct::cli
