#pragma once

#include <json.hpp>

#include "cubic/affine.hpp"
#include "cubic/lattice.hpp"
#include "cubic/ray.hpp"
#include "cubic/series.hpp"

namespace cubic {

using Json = nlohmann::ordered_json;

Json to_json(const CurveClass& b);
CurveClass class_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Direction& m);
Direction direction_from_json(const Json& j);

Json to_json(const CoverPoint& p);
CoverPoint point_from_json(const Json& j);

Json to_json(const ConePoint& p);
ConePoint cone_point_from_json(const Json& j);

// [{class, coeff}] / [{class, exp, coeff}] in deterministic order.
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j, int cutoff);
Json to_json(const LaurentElement& e);
LaurentElement laurent_from_json(const Json& j, int cutoff);

// {direction, cutoff, terms}.
Json to_json(const Ray& r);
Ray ray_from_json(const Json& j);

}  // namespace cubic
