#include <doctest.h>

#include "cubic/json_io.hpp"
#include "cubic/theta.hpp"

using namespace cubic;
using namespace cubic::classes;

TEST_CASE("class and rational round trips") {
  for (const auto& b : lines_all()) CHECK(class_from_json(Json::parse(to_json(b).dump())) == b);
  CHECK(to_json(2 * L() - E(1, 1) - E(2, 1) - E(2, 2) - E(3, 1) - E(3, 2)).dump() == "[2,1,0,1,1,1,1]");
  for (Rational r : {Rational(0), Rational(-1, 4), Rational(7, 3), Rational(12)})
    CHECK(rational_from_json(Json::parse(to_json(r).dump())) == r);
  CHECK(to_json(Rational(-1, 4)).dump() == "\"-1/4\"");
}

TEST_CASE("geometry round trips") {
  Direction m(3, -2);
  CHECK(direction_from_json(to_json(m)) == m);
  CoverPoint p;
  p << Rational(1, 7), Rational(-3, 11);
  CHECK(point_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == "[\"1/7\",\"-3/11\"]");
  for (const auto& s : {"0", "v1", "2v1", "v1+v2", "3v2+v3"}) {
    ConePoint q = parse_cone_point(s);
    CHECK(cone_point_from_json(Json::parse(to_json(q).dump())) == q);
  }
}

TEST_CASE("series and ray round trips") {
  for (int d = 1; d <= 5; ++d) {
    ScatteringDiagram D = truncated_diagram(d);
    for (const auto& r : D.rays()) {
      CHECK(ray_from_json(Json::parse(to_json(r).dump())) == r);
      LaurentElement f = r.function();
      CHECK(laurent_from_json(Json::parse(to_json(f).dump()), d) == f);
      for (const auto& c : r.coefficients) CHECK(series_from_json(Json::parse(to_json(c).dump()), d) == c);
    }
  }
  LaurentElement th = theta_at(ConePoint::vertex(1), generic_point(3), 4);
  CHECK(laurent_from_json(to_json(th), 4) == th);
  CHECK(to_json(LaurentElement(3)).dump() == "[]");
}
