#include <doctest.h>

#include "cubic/theta.hpp"

using namespace cubic;
using namespace cubic::classes;

namespace {

TruncatedSeries z(int d, const CurveClass& b, Rational c = 1) { return TruncatedSeries::monomial(d, b, c); }

CoverPoint pt(Rational x, Rational y) {
  CoverPoint p;
  p << x, y;
  return p;
}

ConePoint P(const std::string& s) { return parse_cone_point(s); }

TruncatedSeries sum_lines(int d, int i, const CurveClass& shift) {
  TruncatedSeries s(d);
  for (const auto& l : lines_meeting(i)) s += z(d, shift + l);
  return s;
}

const std::vector<std::string> kPoints{"v1", "v2", "v3", "2v1", "v1+v2"};

}  // namespace

TEST_CASE("broken lines for theta_v1") {
  auto one = broken_lines(ConePoint::vertex(1), pt(Rational(7, 3), Rational(1, 5)), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].segments.size() == 1);
  CHECK(one[0].monomial() == LaurentElement::monomial(1, Direction(1, 0)));
  CHECK(one[0].segments.front().exponent == Direction(1, 0));

  CHECK(broken_lines(ConePoint::vertex(1), pt(Rational(-1, 3), Rational(5, 7)), 1).empty());

  auto two = broken_lines(ConePoint::vertex(1), pt(Rational(1, 7), Rational(1, 11)), 3);
  REQUIRE(two.size() == 2);
  LaurentElement sum(3);
  for (const auto& l : two) {
    sum += l.monomial();
    CHECK(l.segments.front().coefficient == TruncatedSeries::one(3));
  }
  LaurentElement expected =
      LaurentElement::monomial(3, Direction(1, 0)) + LaurentElement::monomial(3, Direction(-1, 0), z(3, D(2) + D(3)));
  CHECK(sum == expected);
  CHECK(theta_at(ConePoint::vertex(1), pt(Rational(1, 7), Rational(1, 11)), 3) == expected);
  CHECK(theta_at(ConePoint::vertex(1), pt(Rational(7, 3), Rational(1, 5)), 1) ==
        LaurentElement::monomial(1, Direction(1, 0)));
}

TEST_CASE("theta_0 is 1") {
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k < 6; ++k) CHECK(theta_at(ConePoint::origin(), generic_point(k), d) == LaurentElement::one(d));
}

TEST_CASE("genericity violations are reported") {
  // An endpoint on the (1,1) wall.
  CHECK_THROWS_AS(broken_lines(ConePoint::vertex(1), pt(1, 1), 3), GenericityError);
}

TEST_CASE("product examples") {
  auto t1 = structure_constants(P("v1"), P("v1"), 3);
  CHECK(t1.entries.size() == 2);
  CHECK(t1.entries.at(P("2v1")) == TruncatedSeries::one(3));
  CHECK(t1.entries.at(ConePoint::origin()) == z(3, D(2) + D(3), 2));

  auto t2 = structure_constants(P("v1"), P("v2"), 3);
  CHECK(t2.entries.size() == 3);
  CHECK(t2.entries.at(P("v1+v2")) == TruncatedSeries::one(3));
  CHECK(t2.entries.at(P("v3")) == z(3, D(3)));
  CHECK(t2.entries.at(ConePoint::origin()) == sum_lines(3, 3, D(3)));

  auto t3 = structure_constants(P("v1+v2"), P("v3"), 4);
  CHECK(t3.entries.size() == 5);
  CHECK(t3.entries.at(P("2v1")) == z(4, D(1)));
  CHECK(t3.entries.at(P("2v2")) == z(4, D(2)));
  CHECK(t3.entries.at(P("v1")) == sum_lines(4, 1, D(1)));
  CHECK(t3.entries.at(P("v2")) == sum_lines(4, 2, D(2)));
  CHECK(t3.entries.at(ConePoint::origin()) == twisted_cubic_sum(4) + z(4, anticanonical(), 8));
  CHECK(twisted_cubic_sum(4).terms().size() == 24);
}

TEST_CASE("structure constant properties") {
  const int d = 3;
  ScatteringDiagram D = truncated_diagram(d);
  for (const auto& a : kPoints)
    for (const auto& b : kPoints) {
      ConePoint p1 = P(a), p2 = P(b);
      auto t = structure_constants(D, p1, p2, 0);
      auto u = structure_constants(D, p1, p2, 5);
      auto swapped = structure_constants(D, p2, p1, 0);
      CHECK_MESSAGE(t.entries == u.entries, a, " ", b);
      CHECK_MESSAGE(t.entries == swapped.entries, a, " ", b);
      for (const auto& [r, alpha] : t.entries) {
        CHECK(!alpha.is_zero());
        CHECK(height(r) <= height(p1) + height(p2));
        for (const auto& [cls, c] : alpha.terms()) CHECK(is_integer(c));
      }
      // Same closed cone: the straight product gives constant term 1 at p1 + p2.
      Direction s1 = lift_lattice(p1, Sheet::First), s2 = lift_lattice(p2, Sheet::First);
      for (int k = 0; k < 6; ++k) {
        Eigen::Vector2i c1 = cone_coordinates(k, s1), c2 = cone_coordinates(k, s2);
        if ((c1.array() >= 0).all() && (c2.array() >= 0).all()) {
          CHECK_MESSAGE(t.entries.at(project(Direction(s1 + s2))).constant_term() == 1, a, " ", b);
          break;
        }
      }
    }
}

TEST_CASE("min-convexity along broken lines") {
  int lines = 0;
  for (int d : {3, 4}) {
    ScatteringDiagram D = truncated_diagram(d);
    for (const auto& q : kPoints)
      for (int k = 0; k < 12; ++k) {
        for (const auto& bl : broken_lines(D, P(q), generic_point(k))) {
          ++lines;
          auto f = bl.f_slopes();
          REQUIRE(f.size() == bl.segments.size());
          for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            const Junction& j = bl.junctions[i];
            CHECK(f[i + 1] <= f[i]);
            if (j.term > 0) CHECK(f[i] - f[i + 1] >= (j.boundary ? 2 : 1));
          }
          CHECK(bl.segments.front().coefficient == TruncatedSeries::one(d));
          for (const auto& [b, c] : bl.final_segment().coefficient.terms()) CHECK(degree(b) < d);
        }
      }
  }
  CHECK(lines > 100);
}

TEST_CASE("consistency") {
  CHECK(verify_consistency(P("v1"), 1).passed);
  for (const auto& q : kPoints) {
    auto rep = verify_consistency(P(q), 3);
    CHECK_MESSAGE(rep.passed, q, ": ", rep.counterexample);
    CHECK(rep.checks > 0);
  }
  for (const auto& q : {"v1", "v1+v2"}) CHECK(verify_consistency(P(q), 4).passed);
}

TEST_CASE("endpoint independence within a chamber") {
  const int d = 4;
  ScatteringDiagram D = truncated_diagram(d);
  // (5,1) + small offsets stay between the walls (1,0) and (3,1).
  for (const auto& q : kPoints) {
    LaurentElement a = theta_at(D, P(q), pt(Rational(5), Rational(1, 101)));
    LaurentElement b = theta_at(D, P(q), pt(Rational(7), Rational(2, 103)));
    CHECK(a == b);
  }
}

TEST_CASE("mirror equation") {
  auto r4 = verify_mirror_equation(4);
  CHECK(r4.residual.is_zero());
  CHECK(r4.coefficients_match());
  CHECK(r4.passed());
  for (int i = 1; i <= 3; ++i) {
    std::string k = "theta" + std::to_string(i);
    CHECK(r4.found.at(k + "^2") == z(4, D(i)));
    CHECK(r4.found.at(k) == sum_lines(4, i, D(i)));
    CHECK(line_sum(i, 4) * z(4, D(i)) == sum_lines(4, i, D(i)));
  }
  CHECK(r4.found.at("1") == twisted_cubic_sum(4) + z(4, anticanonical(), 4));

  for (int d : {1, 2, 3}) CHECK(verify_mirror_equation(d).passed());
  auto r2 = verify_mirror_equation(2);
  for (const auto& k : {"1", "theta1", "theta2", "theta3"}) CHECK((!r2.found.count(k) || r2.found.at(k).is_zero()));
  auto r1 = verify_mirror_equation(1);
  for (const auto& [k, v] : r1.found) CHECK(v.is_zero());
}

TEST_CASE("Frobenius constant term") {
  TruncatedSeries f4 = frobenius_constant_term(4);
  CHECK(f4 == twisted_cubic_sum(4) + z(4, anticanonical(), 10));
  CHECK(frobenius_constant_term(3).is_zero());
  // theta_{v_i}^2 = theta_{2v_i} + 2 z^{D_j + D_k} moves 6 z^D into the constant.
  TruncatedSeries mirror_constant = verify_mirror_equation(4).found.at("1");
  TruncatedSeries shift(4);
  for (int i = 1; i <= 3; ++i) shift += z(4, D(i)) * z(4, anticanonical() - D(i), 2);
  CHECK(f4 == mirror_constant + shift);
}
