#pragma once

#include <array>
#include <string>

#include <Eigen/Core>

#include "cubic/lattice.hpp"
#include "cubic/rational.hpp"
#include "cubic/word.hpp"

namespace cubic {

// Integral vectors and exponents on the cover plane.
using Direction = Eigen::Vector2i;
using CoverPoint = Eigen::Matrix<Rational, 2, 1>;
using SL2Matrix = Eigen::Matrix2i;

// Strict lexicographic order, usable as a map comparator.
struct DirectionLess {
  bool operator()(const Direction& a, const Direction& b) const {
    return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1);
  }
};

int det(const Direction& a, const Direction& b);
Rational det(const CoverPoint& a, const CoverPoint& b);
CoverPoint to_point(const Direction& m);
bool is_primitive(const Direction& m);

// The six cover rays v1, v2, v3, -v1, -v2, -v3 (0-based index k).
const std::array<Direction, 6>& cover_rays();
// Boundary divisor index 1..3 carried by cover ray k.
inline int ray_divisor(int k) { return k % 3 + 1; }
// Index k of the cover ray through m, or -1.
int cover_ray_index(const Direction& m);

// 0-based cover cone containing m in the half-open sense [ray_k, ray_{k+1}). m nonzero.
int cover_cone(const Direction& m);
int cover_cone(const CoverPoint& p);
// Whether p lies strictly inside a cover cone (not on any of the six rays).
bool in_open_cone(const CoverPoint& p);
// Coordinates of v in the basis (ray_k, ray_{k+1}); determinant of consecutive rays is 1.
Eigen::Vector2i cone_coordinates(int k, const Direction& v);

enum class Sheet { First = 1, Second = 2 };

// a*v_i + b*v_{i+1} with i in {1,2,3} and a, b >= 0.
class ConePoint {
 public:
  ConePoint() : cone_(1), a_(0), b_(0) {}
  ConePoint(int cone, Rational a, Rational b);
  static ConePoint origin() { return ConePoint(); }
  // v_i as a lattice point.
  static ConePoint vertex(int i) { return ConePoint(i, 1, 0); }

  int cone() const { return cone_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_origin() const { return a_ == 0 && b_ == 0; }
  bool is_lattice() const { return is_integer(a_) && is_integer(b_); }

  bool operator==(const ConePoint& o) const { return cone_ == o.cone_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const ConePoint& o) const { return !(*this == o); }
  bool operator<(const ConePoint& o) const;

 private:
  int cone_;
  Rational a_, b_;
};

CoverPoint lift(const ConePoint& p, Sheet sheet);
// Integral lift of a lattice point.
Direction lift_lattice(const ConePoint& p, Sheet sheet);
// Image in B of a nonzero cover vector.
ConePoint project(const Direction& m);
ConePoint project(const CoverPoint& p);
// "v1", "2v1", "v1+v2", "0", "3v2+v3/2".
std::string to_string(const ConePoint& p);
// Inverse of to_string for lattice points.  Throws std::invalid_argument.
ConePoint parse_cone_point(const std::string& s);

// PL function on the cover given by its values on the six cover rays.
class PLFunction {
 public:
  explicit PLFunction(const std::array<int, 6>& values) : v_(values) {}
  // <D',.> for D' = sum c_i D_i.
  static PLFunction of_divisor(const BoundaryDivisor& d);
  static PLFunction boundary(int i);
  // F = <K_Y,.>, equal to -1 on every cover ray.
  static PLFunction canonical();

  const std::array<int, 6>& values() const { return v_; }
  int operator()(const Direction& m) const;
  Rational operator()(const CoverPoint& p) const;
  // Linear extension of the cone-k formula, evaluated at an arbitrary vector.
  int linear(int k, const Direction& m) const;

 private:
  std::array<int, 6> v_;
};

int pl_value(const PLFunction& f, const Direction& m);
Rational pl_value(const PLFunction& f, const CoverPoint& p);

// -F(m), the hexagonal norm a+b in cone coordinates; defined for every vector.
int height(const Direction& m);
int height(const ConePoint& p);
// -F(m) for primitive m; throws std::invalid_argument otherwise.
int min_wall_degree(const Direction& m);

SL2Matrix generator_matrix(Generator g);

struct SL2Word {
  Word letters;
  SL2Matrix matrix = SL2Matrix::Identity();
  static SL2Word of(const Word& w);
  Direction apply(const Direction& m) const { return matrix * m; }
};

// Euclidean decomposition: rotate into the first cone with S, then peel T and T.S steps.
SL2Word sl2_word_for(const Direction& m);

}  // namespace cubic
