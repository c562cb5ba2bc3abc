#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/affine.hpp"
#include "cubic/series.hpp"

namespace cubic {

// A wall on the cover: primitive direction m and f = 1 + sum_k c_k x^{-k m}.
struct Ray {
  Direction direction;
  int cutoff = 1;
  // coefficients[k-1] = c_k.
  std::vector<TruncatedSeries> coefficients;

  Ray(const Direction& m, int d);
  Ray(const Direction& m, const LaurentElement& f);

  // Index of the cover ray through the direction, or -1 for interior walls.
  int boundary_index() const { return cover_ray_index(direction); }
  bool is_boundary() const { return boundary_index() >= 0; }
  // z^{D_j} for a boundary direction.
  std::optional<CurveClass> kink() const;
  bool is_trivial() const;

  LaurentElement function() const;
  // Full crossing factor: z^{D_j} f on boundary rays, f otherwise.
  LaurentElement factor() const;

  bool operator==(const Ray& o) const;
  bool operator!=(const Ray& o) const { return !(*this == o); }
};

// "1 + c_1 x^{-m} + c_2 x^{-2m} + ..." in the chart of the cover cone containing m.
std::string to_string(const Ray& ray);

// (k, beta) -> N, from log f = sum k N z^beta x^{-k m}.
std::map<std::pair<int, CurveClass>, Rational> log_ray_invariants(const Ray& ray);

// Applies x^m -> x^m g^{<n,m>}, n the primitive normal to the ray positive on the source side.
// Throws std::domain_error for a negative kink exponent at a boundary ray.
LaurentElement cross_ray(const LaurentElement& e, const Ray& ray, const CoverPoint& source_side);

// Primitive normal to m, positive at the given point (which must not lie on the line of m).
Direction source_normal(const Direction& m, const CoverPoint& source_side);

}  // namespace cubic
