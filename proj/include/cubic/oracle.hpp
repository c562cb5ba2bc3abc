#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "cubic/theta.hpp"

namespace cubic::oracle {

// Coordinates (l, b11, b12, b21, b22, b31, b32) of l L - sum b_ij E_ij, kept apart from CurveClass.
using RawClass = std::array<int, 7>;

struct Bounds {
  int ell_min = 0, ell_max = 3;
  int b_min = -1, b_max = 2;
};

struct ClassQuery {
  std::optional<int> self_intersection;
  std::optional<int> degree;
  std::array<std::optional<int>, 3> boundary;
  Bounds bounds;
  // Every bound moved outward by one.
  ClassQuery widened() const;
};

std::set<CurveClass> enumerate_classes(const ClassQuery& q);
bool stable_under_widening(const ClassQuery& q);

struct StableEnumeration {
  std::set<CurveClass> classes;
  ClassQuery query;  // the first query whose result equals that of its widening
  int widenings = 0;
};
// Widens until the result is stable; throws std::runtime_error after max_steps.
StableEnumeration enumerate_until_stable(ClassQuery q, int max_steps = 8);

// The 27 classes with self-intersection -1 and degree 1, found by scanning.
const std::vector<RawClass>& line_classes();

struct EffectivityCertificate {
  bool effective = false;
  std::vector<int> multiplicities;  // indexed like line_classes()
};
EffectivityCertificate certify_effective(const CurveClass& b);

struct ProductComparison {
  bool equal = false;
  CoverPoint endpoint;
  LaurentElement direct{1};
  LaurentElement expanded{1};
  StructureConstantTable table;
};
// theta_p1 * theta_p2 at a generic point against sum_r alpha_{p1 p2 r} theta_r at the same point.
ProductComparison direct_product_oracle(const ScatteringDiagram& diagram, const ConePoint& p1, const ConePoint& p2,
                                        int seed = 0);
ProductComparison direct_product_oracle(const ConePoint& p1, const ConePoint& p2, int d, int seed = 0);

}  // namespace cubic::oracle
