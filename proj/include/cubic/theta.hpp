#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/scattering.hpp"

namespace cubic {

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A wall met by a broken line. term = 0 is a pass; term j > 0 consumes the x^{-j w} part of g^exponent.
struct Junction {
  Direction ray;
  bool boundary = false;
  int exponent = 0;
  int term = 0;
  CoverPoint point;
};

struct Segment {
  Exponent exponent;
  TruncatedSeries coefficient;
};

struct BrokenLine {
  ConePoint source;
  Sheet sheet = Sheet::First;
  CoverPoint endpoint;
  // segments[0] comes in from infinity; junctions[i] joins segments[i] and segments[i+1].
  std::vector<Segment> segments;
  std::vector<Junction> junctions;

  const Segment& final_segment() const { return segments.back(); }
  LaurentElement monomial() const;
  // F-slope dF(-m_i) on the cone containing each segment.
  std::vector<int> f_slopes() const;
};

// All broken lines for q != 0 ending at Q over both lifts. Throws GenericityError.
std::vector<BrokenLine> broken_lines(const ScatteringDiagram& diagram, const ConePoint& q, const CoverPoint& Q);
std::vector<BrokenLine> broken_lines(const ConePoint& q, const CoverPoint& Q, int d);

LaurentElement theta_at(const ScatteringDiagram& diagram, const ConePoint& q, const CoverPoint& Q);
LaurentElement theta_at(const ConePoint& q, const CoverPoint& Q, int d);

// Deterministic schedule of spread rational points, cycling through all six cover cones.
CoverPoint generic_point(int index);
// Point near r (or any generic point for r = 0) separated from r by no line through the origin
// spanned by a primitive vector of height <= max_height. attempt selects the perturbation direction.
CoverPoint basepoint_near(const Direction& r, int max_height, int attempt);

struct StructureConstantTable {
  ConePoint p1, p2;
  int cutoff = 1;
  std::map<ConePoint, TruncatedSeries> entries;
  std::map<ConePoint, CoverPoint> basepoints;
};

// Throws std::runtime_error on a non-integral coefficient.
StructureConstantTable structure_constants(const ScatteringDiagram& diagram, const ConePoint& p1,
                                           const ConePoint& p2, int seed = 0);
StructureConstantTable structure_constants(const ConePoint& p1, const ConePoint& p2, int d, int seed = 0);

struct ConsistencyReport {
  bool passed = true;
  int checks = 0;
  std::string counterexample;
};

ConsistencyReport verify_consistency(const ScatteringDiagram& diagram, const ConePoint& q);
ConsistencyReport verify_consistency(const ConePoint& q, int d);

// Coefficients of the mirror equation at cutoff d.
TruncatedSeries line_sum(int i, int d);
TruncatedSeries twisted_cubic_sum(int d);
std::map<std::string, TruncatedSeries> expected_mirror_coefficients(int d);

// theta_{v1} theta_{v2} theta_{v3} = sum_s gamma_s theta_s via iterated structure constants.
std::map<ConePoint, TruncatedSeries> triple_product_expansion(const ScatteringDiagram& diagram, int seed = 0);

struct MirrorReport {
  int cutoff = 1;
  CoverPoint endpoint;
  LaurentElement residual{1};
  std::map<std::string, TruncatedSeries> found;
  std::map<std::string, TruncatedSeries> expected;
  std::vector<std::string> unexpected;
  bool coefficients_match() const;
  bool passed() const { return residual.is_zero() && coefficients_match(); }
};

MirrorReport verify_mirror_equation(const ScatteringDiagram& diagram, int seed = 0);
MirrorReport verify_mirror_equation(int d, int seed = 0);

// Coefficient of theta_0 in theta_{v1} theta_{v2} theta_{v3}.
TruncatedSeries frobenius_constant_term(const ScatteringDiagram& diagram, int seed = 0);
TruncatedSeries frobenius_constant_term(int d, int seed = 0);

}  // namespace cubic
