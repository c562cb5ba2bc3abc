#include "cubic/affine.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cubic {

int det(const Direction& a, const Direction& b) { return a(0) * b(1) - a(1) * b(0); }

Rational det(const CoverPoint& a, const CoverPoint& b) { return a(0) * b(1) - a(1) * b(0); }

CoverPoint to_point(const Direction& m) { return CoverPoint(Rational(m(0)), Rational(m(1))); }

bool is_primitive(const Direction& m) { return std::gcd(m(0), m(1)) == 1; }

const std::array<Direction, 6>& cover_rays() {
  static const std::array<Direction, 6> rays{Direction(1, 0),  Direction(0, 1),  Direction(-1, 1),
                                             Direction(-1, 0), Direction(0, -1), Direction(1, -1)};
  return rays;
}

int cover_ray_index(const Direction& m) {
  if (m.isZero()) return -1;
  for (int k = 0; k < 6; ++k) {
    const auto& r = cover_rays()[k];
    if (det(r, m) == 0 && r.dot(m) > 0) return k;
  }
  return -1;
}

Eigen::Vector2i cone_coordinates(int k, const Direction& v) {
  const auto& r0 = cover_rays()[k];
  const auto& r1 = cover_rays()[(k + 1) % 6];
  return Eigen::Vector2i(det(v, r1), det(r0, v));
}

int cover_cone(const Direction& m) {
  if (m.isZero()) throw std::invalid_argument("zero vector has no cone");
  for (int k = 0; k < 6; ++k) {
    auto c = cone_coordinates(k, m);
    if (c(0) > 0 && c(1) >= 0) return k;
  }
  throw std::logic_error("cover_cone: no cone found");
}

int cover_cone(const CoverPoint& p) {
  if (p(0) == 0 && p(1) == 0) throw std::invalid_argument("origin has no cone");
  for (int k = 0; k < 6; ++k) {
    CoverPoint r0 = to_point(cover_rays()[k]);
    CoverPoint r1 = to_point(cover_rays()[(k + 1) % 6]);
    if (det(p, r1) > 0 && det(r0, p) >= 0) return k;
  }
  throw std::logic_error("cover_cone: no cone found");
}

bool in_open_cone(const CoverPoint& p) {
  for (const auto& r : cover_rays()) {
    CoverPoint q = to_point(r);
    if (det(q, p) == 0) return false;
  }
  return true;
}

ConePoint::ConePoint(int cone, Rational a, Rational b) : cone_(cone), a_(std::move(a)), b_(std::move(b)) {
  if (cone_ < 1 || cone_ > 3) throw std::invalid_argument("cone index must be 1, 2 or 3");
  if (a_ < 0 || b_ < 0) throw std::invalid_argument("cone coordinates must be nonnegative");
  if (a_ == 0 && b_ == 0) {
    cone_ = 1;
  } else if (a_ == 0) {
    cone_ = cone_ % 3 + 1;
    a_ = b_;
    b_ = 0;
  }
}

bool ConePoint::operator<(const ConePoint& o) const {
  if (cone_ != o.cone_) return cone_ < o.cone_;
  if (a_ != o.a_) return a_ < o.a_;
  return b_ < o.b_;
}

CoverPoint lift(const ConePoint& p, Sheet sheet) {
  if (p.is_origin()) throw std::invalid_argument("lift: origin has no lift");
  CoverPoint r0 = to_point(cover_rays()[p.cone() - 1]);
  CoverPoint r1 = to_point(cover_rays()[p.cone() % 6]);
  CoverPoint q = r0 * p.a() + r1 * p.b();
  if (sheet == Sheet::Second) q = -q;
  return q;
}

Direction lift_lattice(const ConePoint& p, Sheet sheet) {
  if (!p.is_lattice()) throw std::invalid_argument("lift_lattice: not a lattice point");
  CoverPoint q = lift(p, sheet);
  return Direction(static_cast<int>(q(0)), static_cast<int>(q(1)));
}

ConePoint project(const Direction& m) {
  int k = cover_cone(m);
  auto c = cone_coordinates(k, m);
  return ConePoint(k % 3 + 1, c(0), c(1));
}

ConePoint project(const CoverPoint& p) {
  int k = cover_cone(p);
  CoverPoint r0 = to_point(cover_rays()[k]);
  CoverPoint r1 = to_point(cover_rays()[(k + 1) % 6]);
  return ConePoint(k % 3 + 1, det(p, r1), det(r0, p));
}

std::string to_string(const ConePoint& p) {
  if (p.is_origin()) return "0";
  auto term = [](const Rational& c, int i) {
    std::string s = c == 1 ? "" : to_string(c);
    return s + "v" + std::to_string(i);
  };
  std::string out = term(p.a(), p.cone());
  if (p.b() != 0) out += "+" + term(p.b(), p.cone() % 3 + 1);
  return out;
}

ConePoint parse_cone_point(const std::string& s) {
  if (s == "0") return ConePoint::origin();
  std::array<Rational, 3> coeff{0, 0, 0};
  std::size_t pos = 0;
  bool any = false;
  while (pos <= s.size()) {
    auto plus = s.find('+', pos);
    std::string tok = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    auto v = tok.find('v');
    if (v == std::string::npos || v + 2 != tok.size()) throw std::invalid_argument("malformed point: " + s);
    int i = tok[v + 1] - '0';
    if (i < 1 || i > 3) throw std::invalid_argument("malformed point: " + s);
    std::string c = tok.substr(0, v);
    Rational r = c.empty() ? Rational(1) : parse_rational(c);
    if (r <= 0) throw std::invalid_argument("malformed point: " + s);
    coeff[i - 1] += r;
    any = true;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  if (!any) throw std::invalid_argument("malformed point: " + s);
  int nz = 0;
  for (auto& c : coeff) nz += c != 0;
  if (nz == 3) throw std::invalid_argument("point not in a single cone: " + s);
  if (nz == 1) {
    for (int i = 0; i < 3; ++i)
      if (coeff[i] != 0) return ConePoint(i + 1, coeff[i], 0);
  }
  for (int i = 0; i < 3; ++i)
    if (coeff[i] != 0 && coeff[(i + 1) % 3] != 0) return ConePoint(i + 1, coeff[i], coeff[(i + 1) % 3]);
  throw std::invalid_argument("malformed point: " + s);
}

PLFunction PLFunction::of_divisor(const BoundaryDivisor& d) {
  std::array<int, 6> v{};
  for (int k = 0; k < 6; ++k) v[k] = d.c[k % 3];
  return PLFunction(v);
}

PLFunction PLFunction::boundary(int i) {
  BoundaryDivisor d;
  d.c[i - 1] = 1;
  return of_divisor(d);
}

PLFunction PLFunction::canonical() { return PLFunction({-1, -1, -1, -1, -1, -1}); }

int PLFunction::linear(int k, const Direction& m) const {
  auto c = cone_coordinates(k, m);
  return c(0) * v_[k] + c(1) * v_[(k + 1) % 6];
}

int PLFunction::operator()(const Direction& m) const {
  if (m.isZero()) return 0;
  return linear(cover_cone(m), m);
}

Rational PLFunction::operator()(const CoverPoint& p) const {
  if (p(0) == 0 && p(1) == 0) return 0;
  int k = cover_cone(p);
  CoverPoint r0 = to_point(cover_rays()[k]);
  CoverPoint r1 = to_point(cover_rays()[(k + 1) % 6]);
  return det(p, r1) * v_[k] + det(r0, p) * v_[(k + 1) % 6];
}

int pl_value(const PLFunction& f, const Direction& m) { return f(m); }
Rational pl_value(const PLFunction& f, const CoverPoint& p) { return f(p); }

int height(const Direction& m) { return -PLFunction::canonical()(m); }

int height(const ConePoint& p) {
  if (!p.is_lattice()) throw std::invalid_argument("height: not a lattice point");
  return static_cast<int>(p.a() + p.b());
}

int min_wall_degree(const Direction& m) {
  if (m.isZero() || !is_primitive(m)) throw std::invalid_argument("min_wall_degree: direction not primitive");
  return height(m);
}

SL2Matrix generator_matrix(Generator g) {
  SL2Matrix m;
  switch (g) {
    case Generator::S: m << 0, -1, 1, 1; break;
    case Generator::T: m << 1, 1, 0, 1; break;
    case Generator::SInv: m << 1, 1, -1, 0; break;
    case Generator::TInv: m << 1, -1, 0, 1; break;
  }
  return m;
}

SL2Word SL2Word::of(const Word& w) {
  SL2Word out;
  out.letters = w;
  for (auto g : w) out.matrix = out.matrix * generator_matrix(g);
  return out;
}

SL2Word sl2_word_for(const Direction& m) {
  if (m.isZero() || !is_primitive(m)) throw std::invalid_argument("sl2_word_for: direction not primitive");
  int k = cover_cone(m);
  Word w(k, Generator::S);
  auto c = cone_coordinates(0, SL2Word::of(Word(6 - k, Generator::S)).apply(m));
  long a = c(0), b = c(1);
  while (!(a == 1 && b == 0)) {
    if (a > b) {
      w.push_back(Generator::T);
      a -= b;
    } else {
      w.push_back(Generator::T);
      w.push_back(Generator::S);
      b -= a;
    }
  }
  return SL2Word::of(w);
}

}  // namespace cubic
