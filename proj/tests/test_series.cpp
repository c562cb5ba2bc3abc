#include <doctest.h>

#include <random>

#include "cubic/ray.hpp"
#include "cubic/scattering.hpp"

using namespace cubic;
using namespace cubic::classes;

namespace {

TruncatedSeries z(int d, const CurveClass& b, Rational c = 1) { return TruncatedSeries::monomial(d, b, c); }

LaurentElement X(int d, int a, int b) { return LaurentElement::monomial(d, Exponent(a, b)); }

LaurentElement zx(int d, const CurveClass& b, int a, int c, Rational coeff = 1) {
  return LaurentElement::monomial(d, Exponent(a, c), z(d, b, coeff));
}

LaurentElement random_element(std::mt19937& rng, int d) {
  auto lines = lines_all();
  std::uniform_int_distribution<int> line(0, 26), coeff(-3, 3), ex(-2, 2), count(0, 5), nlines(0, 2);
  LaurentElement e(d);
  for (int t = count(rng); t > 0; --t) {
    CurveClass b;
    for (int k = nlines(rng); k > 0; --k) b = b + lines[line(rng)];
    e.add_term(Exponent(ex(rng), ex(rng)), z(d, b, Rational(coeff(rng), 1 + (t % 2))));
  }
  return e;
}

LaurentElement random_nilpotent(std::mt19937& rng, int d) {
  auto lines = lines_all();
  std::uniform_int_distribution<int> line(0, 26), coeff(-3, 3), ex(-2, 2), count(1, 4), nlines(1, 2);
  LaurentElement e(d);
  for (int t = count(rng); t > 0; --t) {
    CurveClass b;
    for (int k = nlines(rng); k > 0; --k) b = b + lines[line(rng)];
    e.add_term(Exponent(ex(rng), ex(rng)), z(d, b, coeff(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("cutoff validation") {
  CHECK_THROWS_AS(DegreeCutoff(0), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(2) + TruncatedSeries(3), std::invalid_argument);
  CHECK_THROWS_AS(X(2, 1, 0) * X(3, 1, 0), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
  TruncatedSeries a2 = TruncatedSeries::one(2) + z(2, E(1, 1));
  TruncatedSeries b2 = TruncatedSeries::one(2) - z(2, E(1, 1));
  CHECK(a2 * b2 == TruncatedSeries::one(2));
  TruncatedSeries a3 = TruncatedSeries::one(3) + z(3, E(1, 1));
  TruncatedSeries b3 = TruncatedSeries::one(3) - z(3, E(1, 1));
  CHECK(a3 * b3 == TruncatedSeries::one(3) - z(3, 2 * E(1, 1)));
  CHECK(X(3, 1, 0) * X(3, -1, 0) == LaurentElement::one(3));
  CHECK(mul(X(3, 2, 1), X(3, -1, 3)) == X(3, 1, 4));
}

TEST_CASE("degree truncation") {
  TruncatedSeries s(3);
  s.add_term(anticanonical(), 5);
  CHECK(s.is_zero());
  s.add_term(D(1) + D(2), 5);
  CHECK(s.coefficient(D(1) + D(2)) == 5);
  CHECK(s.truncated(2).is_zero());
}

TEST_CASE("unit inversion") {
  LaurentElement u = LaurentElement::one(3) - zx(3, D(2) + D(3), -2, 0);
  CHECK(invert_unit(u) == LaurentElement::one(3) + zx(3, D(2) + D(3), -2, 0));
  CHECK(invert_unit(LaurentElement::one(5)) == LaurentElement::one(5));
  LaurentElement v = LaurentElement::one(3) + zx(3, E(1, 1), -1, 0);
  CHECK(invert_unit(v) == LaurentElement::one(3) - zx(3, E(1, 1), -1, 0) + zx(3, 2 * E(1, 1), -2, 0));
  CHECK_THROWS_AS(invert_unit(X(3, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(invert_unit(TruncatedSeries::one(3) * Rational(2)), std::domain_error);

  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    LaurentElement w = LaurentElement::one(4) + random_nilpotent(rng, 4);
    CHECK(w * invert_unit(w) == LaurentElement::one(4));
    CHECK(power(w, -2) * power(w, 2) == LaurentElement::one(4));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(2024);
  for (int d : {2, 3, 4}) {
    for (int t = 0; t < 30; ++t) {
      LaurentElement a = random_element(rng, d), b = random_element(rng, d), c = random_element(rng, d);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * LaurentElement::one(d) == a);
      CHECK(a - a == LaurentElement(d));
      CHECK(a + (-a) == LaurentElement(d));
    }
  }
}

TEST_CASE("log and exp") {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    LaurentElement u = random_nilpotent(rng, 4);
    CHECK(log_unit(exp_nilpotent(u)) == u);
    LaurentElement w = LaurentElement::one(4) + u;
    CHECK(exp_nilpotent(log_unit(w)) == w);
  }
  for (int d = 1; d <= 5; ++d) {
    LaurentElement f = base_ray(d).function();
    CHECK(exp_nilpotent(log_unit(f)) == f);
  }
  CHECK_THROWS_AS(log_unit(X(3, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(exp_nilpotent(LaurentElement::one(3)), std::domain_error);
}

TEST_CASE("log ray invariants of the base ray") {
  Ray f = base_ray(4);
  auto N = log_ray_invariants(f);
  for (const auto& l : lines_meeting(1)) {
    CHECK(N.at({1, l}) == 1);
    CHECK(N.at({2, 2 * l}) == Rational(-1, 4));
  }
  CHECK(N.at({2, D(2) + D(3)}) == 2);
}

TEST_CASE("ray crossing examples") {
  CoverPoint first_quadrant;
  first_quadrant << Rational(1), Rational(1, 3);
  // X1 across the boundary ray (0,1) picks up z^{D2}.
  Ray rho2 = canonical_ray(Direction(0, 1), 2);
  CHECK(cross_ray(X(2, 1, 0), rho2, first_quadrant) == zx(2, D(2), 1, 0));

  Ray r11 = canonical_ray(Direction(1, 1), 3);
  CoverPoint above;
  above << Rational(1, 3), Rational(1);
  CHECK(cross_ray(X(3, 0, 1), r11, above) == X(3, 0, 1) * r11.function());
  CHECK(cross_ray(X(3, 1, 1), r11, above) == X(3, 1, 1));

  // A monomial carried against the boundary ray direction.
  CoverPoint second;
  second << Rational(-1), Rational(1, 2) + 1;
  CHECK_THROWS_AS(cross_ray(X(2, 1, 0), rho2, second), std::domain_error);
}

TEST_CASE("interior crossings are involutive") {
  for (int d = 2; d <= 5; ++d) {
    ScatteringDiagram D = truncated_diagram(d);
    for (const auto& r : D.rays()) {
      if (r.is_boundary()) continue;
      Direction m = r.direction;
      // Points on either side of the ray.
      CoverPoint left = to_point(m) * Rational(4) + to_point(Direction(-m(1), m(0))) * Rational(1, 5);
      CoverPoint right = to_point(m) * Rational(4) - to_point(Direction(-m(1), m(0))) * Rational(1, 5);
      for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
          LaurentElement e = X(d, a, b);
          CHECK(cross_ray(cross_ray(e, r, left), r, right) == e);
        }
    }
  }
}

TEST_CASE("boundary crossing agrees with the chart relation") {
  // X1 X3 = z^{D2} X2 f_rho2 with X1 = x^{(1,0)}, X2 = x^{(0,1)}, X3 = x^{(-1,1)}.
  CoverPoint source;
  source << Rational(1), Rational(1, 3);
  for (int d = 1; d <= 4; ++d) {
    Ray rho2 = canonical_ray(Direction(0, 1), d);
    LaurentElement X1_image = zx(d, D(2), 0, 1) * rho2.function() * X(d, 1, -1);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        LaurentElement chart = power(X1_image, a) * power(X(d, 0, 1), b);
        CHECK(cross_ray(X(d, a, b), rho2, source) == chart);
      }
  }
}

TEST_CASE("pretty printing") {
  CHECK(to_string(z(3, D(2) + D(3))) == "z^{D2+D3}");
  LaurentElement e = X(3, 1, 0) + zx(3, D(2) + D(3), -1, 0);
  CHECK(to_string(e, 0) == "z^{D2+D3} X1^-1 + X1");
}
