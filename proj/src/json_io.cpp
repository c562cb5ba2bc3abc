#include "cubic/json_io.hpp"

#include <stdexcept>

namespace cubic {

Json to_json(const CurveClass& b) {
  Json j = Json::array();
  for (int k = 0; k < 7; ++k) j.push_back(b.vector()(k));
  return j;
}

CurveClass class_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 7) throw std::invalid_argument("curve class must be 7 integers");
  ClassVector v;
  for (int k = 0; k < 7; ++k) v(k) = j.at(k).get<int>();
  return CurveClass(v);
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json to_json(const Direction& m) { return Json::array({m(0), m(1)}); }

Direction direction_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("direction must be 2 integers");
  return Direction(j.at(0).get<int>(), j.at(1).get<int>());
}

Json to_json(const CoverPoint& p) { return Json::array({to_string(p(0)), to_string(p(1))}); }

CoverPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be 2 rationals");
  return CoverPoint(rational_from_json(j.at(0)), rational_from_json(j.at(1)));
}

Json to_json(const ConePoint& p) {
  return Json{{"name", to_string(p)}, {"cone", p.cone()}, {"a", to_string(p.a())}, {"b", to_string(p.b())}};
}

ConePoint cone_point_from_json(const Json& j) {
  return ConePoint(j.at("cone").get<int>(), rational_from_json(j.at("a")), rational_from_json(j.at("b")));
}

Json to_json(const TruncatedSeries& s) {
  Json arr = Json::array();
  for (const auto& [b, c] : s.terms()) arr.push_back(Json{{"class", to_json(b)}, {"coeff", to_json(c)}});
  return arr;
}

TruncatedSeries series_from_json(const Json& j, int cutoff) {
  TruncatedSeries s(cutoff);
  for (const auto& t : j) s.add_term(class_from_json(t.at("class")), rational_from_json(t.at("coeff")));
  return s;
}

Json to_json(const LaurentElement& e) {
  Json arr = Json::array();
  for (const auto& [m, c] : e.terms())
    for (const auto& [b, x] : c.terms())
      arr.push_back(Json{{"class", to_json(b)}, {"exp", to_json(m)}, {"coeff", to_json(x)}});
  return arr;
}

LaurentElement laurent_from_json(const Json& j, int cutoff) {
  LaurentElement e(cutoff);
  for (const auto& t : j)
    e.add_term(direction_from_json(t.at("exp")),
               TruncatedSeries::monomial(cutoff, class_from_json(t.at("class")), rational_from_json(t.at("coeff"))));
  return e;
}

Json to_json(const Ray& r) {
  return Json{{"direction", to_json(r.direction)}, {"cutoff", r.cutoff}, {"terms", to_json(r.function())}};
}

Ray ray_from_json(const Json& j) {
  int d = j.at("cutoff").get<int>();
  return Ray(direction_from_json(j.at("direction")), laurent_from_json(j.at("terms"), d));
}

}  // namespace cubic
