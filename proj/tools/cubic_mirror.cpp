#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/cayley.hpp"
#include "cubic/json_io.hpp"
#include "cubic/oracle.hpp"
#include "cubic/theta.hpp"

using namespace cubic;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int degree = 4;
  std::string format = "text";
  std::string cache;
  bool trace = false;
  int seed = 0;
  bool json() const { return format == "json"; }
};

std::unique_ptr<RayCache> make_cache(const RunConfig& cfg) {
  if (cfg.cache.empty()) return std::make_unique<RayCache>();
  return std::make_unique<RayCache>(std::filesystem::path(cfg.cache));
}

ScatteringDiagram diagram_for(const RunConfig& cfg) {
  auto cache = make_cache(cfg);
  return truncated_diagram(cfg.degree, cache.get());
}

ConePoint point_arg(const std::string& s) {
  try {
    return parse_cone_point(s);
  } catch (const std::exception& e) {
    throw UsageError("malformed point '" + s + "': " + e.what());
  }
}

Direction direction_arg(const std::vector<int>& v) {
  Direction m(v.at(0), v.at(1));
  if (!is_primitive(m)) throw UsageError("direction must be primitive");
  return m;
}

void require_degree(const RunConfig& cfg, int minimum, const std::string& cmd) {
  if (cfg.degree < minimum) throw UsageError(cmd + " needs --degree >= " + std::to_string(minimum));
}

std::string point_text(const CoverPoint& p) { return "(" + to_string(p(0)) + ", " + to_string(p(1)) + ")"; }

Json class_list(const std::vector<CurveClass>& v) {
  Json a = Json::array();
  for (const auto& b : v) a.push_back({{"class", to_json(b)}, {"name", to_string(b)}});
  return a;
}

void print_broken_line(std::ostream& os, const BrokenLine& bl) {
  os << "  broken line from " << to_string(bl.source) << " (sheet " << static_cast<int>(bl.sheet) << ")\n";
  for (std::size_t i = 0; i < bl.segments.size(); ++i) {
    const auto& s = bl.segments[i];
    os << "    segment exponent (" << s.exponent(0) << ", " << s.exponent(1) << ") coefficient "
       << to_string(s.coefficient) << "\n";
    if (i < bl.junctions.size()) {
      const auto& j = bl.junctions[i];
      os << "    " << (j.boundary ? "boundary" : "wall") << " (" << j.ray(0) << ", " << j.ray(1) << ") at "
         << point_text(j.point) << " exponent " << j.exponent << " term " << j.term << "\n";
    }
  }
}

Json broken_line_json(const BrokenLine& bl) {
  Json segs = Json::array();
  for (const auto& s : bl.segments) segs.push_back({{"exponent", to_json(s.exponent)}, {"coefficient", to_json(s.coefficient)}});
  Json juncs = Json::array();
  for (const auto& j : bl.junctions)
    juncs.push_back({{"ray", to_json(j.ray)}, {"boundary", j.boundary}, {"exponent", j.exponent}, {"term", j.term},
                     {"point", to_json(j.point)}});
  return {{"source", to_json(bl.source)}, {"sheet", static_cast<int>(bl.sheet)}, {"segments", segs}, {"junctions", juncs}};
}

int cmd_lines(const RunConfig& cfg, int divisor, bool cubics) {
  std::vector<CurveClass> v;
  std::string title;
  if (cubics) {
    v = twisted_cubics_triangle();
    title = "triangle-splitting twisted cubics";
  } else if (divisor > 0) {
    if (divisor > 3) throw UsageError("--divisor must be 1, 2 or 3");
    v = lines_meeting(divisor);
    title = "lines meeting D" + std::to_string(divisor);
  } else {
    v = lines_all();
    title = "lines";
  }
  if (cfg.json()) {
    std::cout << Json{{"kind", title}, {"count", v.size()}, {"classes", class_list(v)}}.dump(2) << "\n";
  } else {
    std::cout << title << ": " << v.size() << "\n";
    for (const auto& b : v) std::cout << to_string(b) << "\n";
  }
  return 0;
}

int cmd_ray(const RunConfig& cfg, const std::vector<int>& dir) {
  Direction m = direction_arg(dir);
  auto cache = make_cache(cfg);
  Ray r = cache->get(m, cfg.degree);
  if (cfg.json()) {
    Json inv = Json::array();
    for (const auto& [key, n] : log_ray_invariants(r))
      inv.push_back({{"k", key.first}, {"class", to_json(key.second)}, {"N", to_json(n)}});
    std::cout << Json{{"ray", to_json(r)}, {"text", to_string(r)}, {"invariants", inv}}.dump(2) << "\n";
  } else {
    std::cout << to_string(r) << "\n";
  }
  return 0;
}

int cmd_diagram(const RunConfig& cfg) {
  ScatteringDiagram D = diagram_for(cfg);
  if (cfg.json()) {
    Json rays = Json::array();
    for (const auto& r : D.rays()) rays.push_back(to_json(r));
    std::cout << Json{{"cutoff", cfg.degree}, {"rays", rays}}.dump(2) << "\n";
  } else {
    std::cout << "rays at cutoff " << cfg.degree << ": " << D.rays().size() << "\n";
    for (const auto& r : D.rays())
      std::cout << "(" << r.direction(0) << ", " << r.direction(1) << "): " << to_string(r) << "\n";
  }
  return 0;
}

CoverPoint endpoint_arg(const std::vector<std::string>& at, int seed) {
  if (at.empty()) return generic_point(seed);
  try {
    CoverPoint Q;
    Q << parse_rational(at.at(0)), parse_rational(at.at(1));
    return Q;
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed endpoint: ") + e.what());
  }
}

int cmd_theta(const RunConfig& cfg, const std::string& pt, const std::vector<std::string>& at) {
  ConePoint q = point_arg(pt);
  CoverPoint Q = endpoint_arg(at, cfg.seed);
  ScatteringDiagram D = diagram_for(cfg);
  std::vector<BrokenLine> lines;
  LaurentElement th(cfg.degree);
  try {
    if (!(q == ConePoint::origin())) lines = broken_lines(D, q, Q);
    th = theta_at(D, q, Q);
  } catch (const GenericityError& e) {
    throw UsageError(std::string("endpoint not generic: ") + e.what());
  }
  if (cfg.json()) {
    Json j{{"point", to_json(q)}, {"endpoint", to_json(Q)}, {"chart", cover_cone(Q)}, {"theta", to_json(th)},
           {"text", to_string(th, cover_cone(Q))}};
    if (cfg.trace) {
      Json bl = Json::array();
      for (const auto& l : lines) bl.push_back(broken_line_json(l));
      j["broken_lines"] = bl;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "theta_" << to_string(q) << " at " << point_text(Q) << " = " << to_string(th, cover_cone(Q)) << "\n";
    if (cfg.trace)
      for (const auto& l : lines) print_broken_line(std::cout, l);
  }
  return 0;
}

int cmd_product(const RunConfig& cfg, const std::string& a, const std::string& b) {
  ConePoint p1 = point_arg(a), p2 = point_arg(b);
  ScatteringDiagram D = diagram_for(cfg);
  StructureConstantTable t = structure_constants(D, p1, p2, cfg.seed);
  if (cfg.json()) {
    Json e = Json::array();
    for (const auto& [r, c] : t.entries) {
      Json row{{"r", to_json(r)}, {"alpha", to_json(c)}, {"text", to_string(c)}};
      if (cfg.trace) row["basepoint"] = to_json(t.basepoints.at(r));
      e.push_back(row);
    }
    std::cout << Json{{"p1", to_json(p1)}, {"p2", to_json(p2)}, {"cutoff", cfg.degree}, {"entries", e}}.dump(2) << "\n";
  } else {
    std::cout << "theta_" << to_string(p1) << " * theta_" << to_string(p2) << " mod I_" << cfg.degree << "\n";
    for (const auto& [r, c] : t.entries) {
      std::cout << "  theta_" << to_string(r) << ": " << to_string(c);
      if (cfg.trace) std::cout << "   [basepoint " << point_text(t.basepoints.at(r)) << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_equation(const RunConfig& cfg) {
  ScatteringDiagram D = diagram_for(cfg);
  MirrorReport rep = verify_mirror_equation(D, cfg.seed);
  if (cfg.json()) {
    Json coeffs = Json::object();
    for (const auto& [k, v] : rep.found) coeffs[k] = to_json(v);
    Json expected = Json::object();
    for (const auto& [k, v] : rep.expected) expected[k] = to_json(v);
    std::cout << Json{{"cutoff", rep.cutoff},
                      {"endpoint", to_json(rep.endpoint)},
                      {"residual", to_json(rep.residual)},
                      {"coefficients", coeffs},
                      {"expected", expected},
                      {"unexpected", rep.unexpected},
                      {"coefficients_match", rep.coefficients_match()},
                      {"passed", rep.passed()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "theta1 theta2 theta3 = sum of the following mod I_" << rep.cutoff << "\n";
    for (const auto& [k, v] : rep.found) std::cout << "  " << k << ": " << to_string(v) << "\n";
    for (const auto& u : rep.unexpected) std::cout << "  unexpected term: " << u << "\n";
    std::cout << "coefficients " << (rep.coefficients_match() ? "match" : "do not match") << "\n";
    std::cout << "residual = " << to_string(rep.residual, cover_cone(rep.endpoint)) << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_frobenius(const RunConfig& cfg) {
  ScatteringDiagram D = diagram_for(cfg);
  TruncatedSeries c = frobenius_constant_term(D, cfg.seed);
  TruncatedSeries expected =
      twisted_cubic_sum(cfg.degree) + TruncatedSeries::monomial(cfg.degree, classes::anticanonical(), 10);
  bool ok = c == expected;
  if (cfg.json()) {
    std::cout << Json{{"cutoff", cfg.degree}, {"constant_term", to_json(c)}, {"expected", to_json(expected)},
                      {"passed", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "constant term = " << to_string(c) << "\n";
    std::cout << "expected      = " << to_string(expected) << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_consistency(const RunConfig& cfg, const std::vector<std::string>& pts) {
  ScatteringDiagram D = diagram_for(cfg);
  bool all = true;
  Json arr = Json::array();
  for (const auto& s : pts) {
    ConePoint q = point_arg(s);
    ConsistencyReport r = verify_consistency(D, q);
    all = all && r.passed;
    if (cfg.json())
      arr.push_back({{"point", to_json(q)}, {"passed", r.passed}, {"checks", r.checks}, {"counterexample", r.counterexample}});
    else
      std::cout << "theta_" << to_string(q) << ": " << (r.passed ? "consistent" : "INCONSISTENT") << " (" << r.checks
                << " checks)" << (r.passed ? "" : "; " + r.counterexample) << "\n";
  }
  if (cfg.json()) std::cout << Json{{"cutoff", cfg.degree}, {"results", arr}, {"passed", all}}.dump(2) << "\n";
  return all ? 0 : 1;
}

Json signed_json(const SignedQuotientSeries& s) {
  Json a = Json::array();
  for (const auto& [k, c] : s.terms()) a.push_back({{"key", {k(0), k(1), k(2)}}, {"coeff", to_json(c)}});
  return a;
}

Json specialized_json(const SpecializedLaurent& e) {
  Json a = Json::array();
  for (const auto& [m, c] : e) a.push_back({{"exp", to_json(m)}, {"coeff", signed_json(c)}});
  return a;
}

int cmd_cayley(const RunConfig& cfg) {
  require_degree(cfg, 4, "cayley");
  CayleyReport rep = verify_cayley(cfg.degree, cfg.seed);
  if (cfg.json()) {
    Json rays = Json::array();
    for (const auto& r : rep.rays) {
      Json cs = Json::array();
      for (const auto& c : r.coefficients) cs.push_back(signed_json(c));
      rays.push_back({{"direction", to_json(r.direction)}, {"coefficients", cs}, {"trivial", r.is_trivial()}});
    }
    Json sq = Json::array(), lin = Json::array();
    for (int i = 0; i < 3; ++i) {
      sq.push_back(signed_json(rep.square_coefficients[i]));
      lin.push_back(signed_json(rep.linear_coefficients[i]));
    }
    std::cout << Json{{"cutoff", rep.cutoff},
                      {"rays", rays},
                      {"all_walls_trivial", rep.all_walls_trivial},
                      {"square_coefficients", sq},
                      {"linear_coefficients", lin},
                      {"constant", signed_json(rep.constant)},
                      {"constant_text", to_string(rep.constant)},
                      {"residual", specialized_json(rep.residual)},
                      {"straight_residual", specialized_json(rep.straight_residual)},
                      {"thetas_agree", rep.thetas_agree},
                      {"passed", rep.passed()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (rep.all_walls_trivial ? "all walls trivial" : "some walls nontrivial") << "; constant = "
              << to_string(rep.constant) << "\n";
    for (int i = 0; i < 3; ++i)
      std::cout << "  theta" << i + 1 << "^2: " << to_string(rep.square_coefficients[i]) << "; theta" << i + 1 << ": "
                << to_string(rep.linear_coefficients[i]) << "\n";
    std::cout << "residual " << (is_zero(rep.residual) ? "0" : "nonzero") << "; straight-line residual "
              << (is_zero(rep.straight_residual) ? "0" : "nonzero") << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_oracle_enumerate(const RunConfig& cfg, std::optional<int> self, std::optional<int> deg,
                         const std::vector<int>& boundary, bool until_stable) {
  oracle::ClassQuery q;
  q.self_intersection = self;
  q.degree = deg;
  if (!boundary.empty()) {
    if (boundary.size() != 3) throw UsageError("--boundary takes three integers");
    for (int i = 0; i < 3; ++i) q.boundary[i] = boundary[i];
  }
  std::set<CurveClass> found;
  bool stable;
  oracle::Bounds used = q.bounds;
  if (until_stable) {
    auto s = oracle::enumerate_until_stable(q);
    found = s.classes;
    used = s.query.bounds;
    stable = true;
  } else {
    found = oracle::enumerate_classes(q);
    stable = oracle::stable_under_widening(q);
  }
  std::vector<CurveClass> v(found.begin(), found.end());
  if (cfg.json()) {
    std::cout << Json{{"count", v.size()},
                      {"stable", stable},
                      {"bounds", {{"ell", {used.ell_min, used.ell_max}}, {"b", {used.b_min, used.b_max}}}},
                      {"classes", class_list(v)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << v.size() << " classes with l in [" << used.ell_min << "," << used.ell_max << "], b in [" << used.b_min
              << "," << used.b_max << "]; " << (stable ? "stable" : "NOT stable") << " under widening\n";
    for (const auto& b : v) std::cout << to_string(b) << "\n";
  }
  return stable ? 0 : 1;
}

int cmd_oracle_effective(const RunConfig& cfg, const std::vector<int>& c) {
  if (c.size() != 7) throw UsageError("--class takes seven integers l b11 b12 b21 b22 b31 b32");
  CurveClass b(c[0], c[1], c[2], c[3], c[4], c[5], c[6]);
  auto cert = oracle::certify_effective(b);
  const auto& lines = oracle::line_classes();
  std::vector<CurveClass> used;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (int k = 0; k < cert.multiplicities[i]; ++k) {
      const auto& l = lines[i];
      used.emplace_back(l[0], l[1], l[2], l[3], l[4], l[5], l[6]);
    }
  if (cfg.json()) {
    std::cout << Json{{"class", to_json(b)}, {"effective", cert.effective}, {"certificate", class_list(used)}}.dump(2)
              << "\n";
  } else {
    std::cout << to_string(b) << ": " << (cert.effective ? "effective" : "not effective");
    if (cert.effective && !used.empty()) {
      std::cout << " =";
      for (std::size_t i = 0; i < used.size(); ++i) std::cout << (i ? " + " : " ") << to_string(used[i]);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_oracle_product(const RunConfig& cfg, const std::string& a, const std::string& b) {
  ConePoint p1 = point_arg(a), p2 = point_arg(b);
  ScatteringDiagram D = diagram_for(cfg);
  auto cmp = oracle::direct_product_oracle(D, p1, p2, cfg.seed);
  int chart = cover_cone(cmp.endpoint);
  if (cfg.json()) {
    std::cout << Json{{"p1", to_json(p1)}, {"p2", to_json(p2)}, {"endpoint", to_json(cmp.endpoint)},
                      {"direct", to_json(cmp.direct)}, {"expanded", to_json(cmp.expanded)}, {"equal", cmp.equal}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "at " << point_text(cmp.endpoint) << "\n";
    std::cout << "  direct:   " << to_string(cmp.direct, chart) << "\n";
    std::cout << "  expanded: " << to_string(cmp.expanded, chart) << "\n";
    std::cout << (cmp.equal ? "equal" : "DIFFERENT") << "\n";
  }
  return cmp.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact scattering diagram, theta functions and mirror equation of the cubic surface"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char* env = std::getenv("CUBIC_MIRROR_CACHE")) cfg.cache = env;
  app.add_option("--degree,-d", cfg.degree, "Degree cutoff d (work mod I_d)")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", cfg.cache, "Ray cache directory (default $CUBIC_MIRROR_CACHE)");
  app.add_flag("--trace", cfg.trace, "Dump broken lines and basepoints behind the output");
  app.add_option("--perturb-seed", cfg.seed, "Index into the generic-point schedule")->check(CLI::NonNegativeNumber);

  int divisor = 0;
  bool cubics = false;
  auto* lines = app.add_subcommand("lines", "The 27 lines, lines meeting D_i, or the 24 twisted cubics");
  lines->add_option("--divisor", divisor, "Only lines meeting D_i");
  lines->add_flag("--cubics", cubics, "Triangle-splitting twisted cubics");

  std::vector<int> dir;
  auto* ray = app.add_subcommand("ray", "Wall function of the canonical ray in a direction");
  ray->add_option("--dir", dir, "Primitive direction x y")->expected(2)->required();

  auto* diagram = app.add_subcommand("diagram", "All rays of the truncated canonical diagram");

  std::string point = "v1", point2 = "v1";
  std::vector<std::string> at;
  auto* theta = app.add_subcommand("theta", "Theta function at an endpoint");
  theta->add_option("--point", point, "Integral point such as v1, 2v1, v1+v2")->required();
  theta->add_option("--at", at, "Endpoint as two rationals")->expected(2);

  auto* product = app.add_subcommand("product", "Structure constants of a product of theta functions");
  product->add_option("--p1", point, "First factor")->required();
  product->add_option("--p2", point2, "Second factor")->required();

  auto* equation = app.add_subcommand("equation", "Verify the mirror equation");
  auto* frobenius = app.add_subcommand("frobenius", "Constant term of theta_v1 theta_v2 theta_v3");

  std::vector<std::string> cpoints{"v1", "v2", "v3", "2v1", "v1+v2"};
  auto* consistency = app.add_subcommand("consistency", "Check wall-crossing consistency of theta functions");
  consistency->add_option("--point", cpoints, "Points to check");

  auto* cayley = app.add_subcommand("cayley", "Specialisation to the two-torsion component");

  auto* orc = app.add_subcommand("oracle", "Independent brute-force checks");
  orc->require_subcommand(1);
  std::optional<int> self, deg;
  std::vector<int> boundary, cls;
  bool until_stable = false;
  auto* enumerate = orc->add_subcommand("enumerate", "Bounded class enumeration");
  enumerate->add_option("--self", self, "Self-intersection");
  enumerate->add_option("--class-degree", deg, "Anticanonical degree");
  enumerate->add_option("--boundary", boundary, "Intersections with D1 D2 D3")->expected(3);
  enumerate->add_flag("--until-stable", until_stable, "Widen bounds until the result is stable");
  auto* effective = orc->add_subcommand("effective", "Certify a class as a sum of lines");
  effective->add_option("--class", cls, "l b11 b12 b21 b22 b31 b32")->expected(7)->required();
  auto* oproduct = orc->add_subcommand("product", "Direct product against the structure-constant expansion");
  oproduct->add_option("--p1", point, "First factor")->required();
  oproduct->add_option("--p2", point2, "Second factor")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lines) return cmd_lines(cfg, divisor, cubics);
    if (*ray) return cmd_ray(cfg, dir);
    if (*diagram) return cmd_diagram(cfg);
    if (*theta) return cmd_theta(cfg, point, at);
    if (*product) return cmd_product(cfg, point, point2);
    if (*equation) return cmd_equation(cfg);
    if (*frobenius) return cmd_frobenius(cfg);
    if (*consistency) return cmd_consistency(cfg, cpoints);
    if (*cayley) return cmd_cayley(cfg);
    if (*enumerate) return cmd_oracle_enumerate(cfg, self, deg, boundary, until_stable);
    if (*effective) return cmd_oracle_effective(cfg, cls);
    if (*oproduct) return cmd_oracle_product(cfg, point, point2);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
