#include <doctest.h>

#include "cubic/oracle.hpp"

using namespace cubic;
using namespace cubic::classes;
using namespace cubic::oracle;

namespace {
std::set<CurveClass> as_set(const std::vector<CurveClass>& v) { return {v.begin(), v.end()}; }
ConePoint P(const std::string& s) { return parse_cone_point(s); }

void check_effective(const TruncatedSeries& s) {
  for (const auto& [b, c] : s.terms()) CHECK_MESSAGE(certify_effective(b).effective, to_string(b));
}
void check_effective(const LaurentElement& e) {
  for (const auto& [m, c] : e.terms()) check_effective(c);
}
}  // namespace

TEST_CASE("line enumeration") {
  ClassQuery q;
  q.self_intersection = -1;
  q.degree = 1;
  auto lines = enumerate_classes(q);
  CHECK(lines.size() == 27);
  CHECK(stable_under_widening(q));
  CHECK(lines == as_set(lines_all()));
  CHECK(line_classes().size() == 27);

  for (int i = 1; i <= 3; ++i) {
    ClassQuery m = q;
    for (int j = 0; j < 3; ++j) m.boundary[j] = (j + 1 == i) ? 1 : 0;
    auto found = enumerate_classes(m);
    CHECK(found.size() == 8);
    CHECK(stable_under_widening(m));
    CHECK(found == as_set(lines_meeting(i)));
  }
}

TEST_CASE("twisted cubic enumeration needs wider bounds") {
  ClassQuery q;
  q.self_intersection = 1;
  q.degree = 3;
  q.boundary = {1, 1, 1};
  // l <= 3 misses the cubics with l = 4 and 5.
  CHECK(enumerate_classes(q).size() == 15);
  CHECK(!stable_under_widening(q));
  StableEnumeration s = enumerate_until_stable(q);
  CHECK(s.classes.size() == 24);
  CHECK(s.classes == as_set(twisted_cubics_triangle()));
  CHECK(stable_under_widening(s.query));
  CHECK(s.query.bounds.ell_max >= 5);
}

TEST_CASE("conic class meeting D1 twice") {
  ClassQuery q;
  q.self_intersection = 0;
  q.degree = 2;
  q.boundary = {2, 0, 0};
  auto s = enumerate_until_stable(q);
  REQUIRE(s.classes.size() == 1);
  CHECK(*s.classes.begin() == D(2) + D(3));
  CHECK(*s.classes.begin() == 2 * L() - E(2, 1) - E(2, 2) - E(3, 1) - E(3, 2));
}

TEST_CASE("effectivity certificates") {
  auto c = certify_effective(D(2) + D(3));
  CHECK(c.effective);
  int used = 0;
  for (int k : c.multiplicities) used += k;
  CHECK(used == 2);
  for (const auto& pi : twisted_cubics_triangle()) CHECK(certify_effective(pi).effective);
  CHECK(!certify_effective(-E(1, 1)).effective);
  CHECK(!certify_effective(E(1, 1) - E(1, 2)).effective);
  CHECK(certify_effective(CurveClass()).effective);
  CHECK(certify_effective(anticanonical()).effective);
}

TEST_CASE("every emitted class is effective") {
  for (int d = 1; d <= 4; ++d) {
    ScatteringDiagram D = truncated_diagram(d);
    for (const auto& r : D.rays())
      for (const auto& c : r.coefficients) check_effective(c);
    for (const auto& a : {"v1", "v2", "v3", "2v1", "v1+v2"}) {
      for (int k = 0; k < 6; ++k) check_effective(theta_at(D, P(a), generic_point(k)));
      for (const auto& b : {"v1", "v2", "v3"})
        for (const auto& [r, alpha] : structure_constants(D, P(a), P(b)).entries) check_effective(alpha);
    }
    for (const auto& [k, s] : verify_mirror_equation(D).found) check_effective(s);
  }
}

TEST_CASE("direct product oracle") {
  ScatteringDiagram D3 = truncated_diagram(3);
  const std::vector<std::string> pts{"v1", "v2", "v3", "2v1", "v1+v2"};
  for (const auto& a : pts)
    for (const auto& b : pts) {
      auto cmp = direct_product_oracle(D3, P(a), P(b));
      CHECK_MESSAGE(cmp.equal, a, " * ", b);
      CHECK(!cmp.direct.is_zero());
    }
  CHECK(direct_product_oracle(P("v1+v2"), P("v3"), 4).equal);
  CHECK(direct_product_oracle(P("v1"), P("v1"), 3, 7).equal);
}
