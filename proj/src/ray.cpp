#include "cubic/ray.hpp"

#include <stdexcept>

namespace cubic {

Ray::Ray(const Direction& m, int d) : direction(m), cutoff(DegreeCutoff(d)) {
  if (m.isZero() || !is_primitive(m)) throw std::invalid_argument("ray direction must be primitive");
}

Ray::Ray(const Direction& m, const LaurentElement& f) : Ray(m, f.cutoff()) {
  for (const auto& [e, c] : f.terms()) {
    if (e.isZero()) {
      if (c != TruncatedSeries::one(cutoff)) throw std::invalid_argument("wall function must have constant term 1");
      continue;
    }
    if (det(e, m) != 0 || e.dot(m) >= 0) throw std::invalid_argument("wall function exponent not along -m");
    int k = -e.dot(m) / m.dot(m);
    if (static_cast<int>(coefficients.size()) < k) coefficients.resize(k, TruncatedSeries(cutoff));
    coefficients[k - 1] = c;
  }
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
}

std::optional<CurveClass> Ray::kink() const {
  int k = boundary_index();
  if (k < 0) return std::nullopt;
  return classes::D(ray_divisor(k));
}

bool Ray::is_trivial() const {
  for (const auto& c : coefficients)
    if (!c.is_zero()) return false;
  return true;
}

LaurentElement Ray::function() const {
  LaurentElement f = LaurentElement::one(cutoff);
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    f.add_term(Exponent(-static_cast<int>(k + 1) * direction), coefficients[k]);
  return f;
}

LaurentElement Ray::factor() const {
  auto kc = kink();
  if (!kc) return function();
  return function() * TruncatedSeries::monomial(cutoff, *kc);
}

bool Ray::operator==(const Ray& o) const {
  return direction == o.direction && cutoff == o.cutoff && function() == o.function();
}

std::map<std::pair<int, CurveClass>, Rational> log_ray_invariants(const Ray& ray) {
  std::map<std::pair<int, CurveClass>, Rational> out;
  LaurentElement lg = log_unit(ray.function());
  for (const auto& [e, c] : lg.terms()) {
    int k = -e.dot(ray.direction) / ray.direction.dot(ray.direction);
    for (const auto& [b, x] : c.terms()) out[{k, b}] = x / k;
  }
  return out;
}

Direction source_normal(const Direction& m, const CoverPoint& source_side) {
  Direction n(-m(1), m(0));
  Rational s = source_side(0) * n(0) + source_side(1) * n(1);
  if (s == 0) throw std::invalid_argument("source side lies on the line of the ray");
  return s > 0 ? n : Direction(-n);
}

LaurentElement cross_ray(const LaurentElement& e, const Ray& ray, const CoverPoint& source_side) {
  if (e.cutoff() != ray.cutoff) throw std::invalid_argument("cutoff mismatch");
  Direction n = source_normal(ray.direction, source_side);
  bool boundary = ray.is_boundary();
  LaurentElement g = ray.factor();
  std::map<int, LaurentElement> powers;
  LaurentElement out(e.cutoff());
  for (const auto& [m, c] : e.terms()) {
    int k = n.dot(m);
    if (boundary && k < 0) throw std::domain_error("negative kink exponent crossing a boundary ray");
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, power(g, k)).first;
    out += LaurentElement::monomial(e.cutoff(), m, c) * it->second;
  }
  return out;
}

std::string to_string(const Ray& ray) {
  std::string out = "1";
  const int chart = cover_cone(ray.direction);
  for (std::size_t k = 0; k < ray.coefficients.size(); ++k) {
    const auto& c = ray.coefficients[k];
    if (c.terms().empty()) continue;
    Exponent e = -static_cast<int>(k + 1) * ray.direction;
    out += " + " + to_string(LaurentElement::monomial(ray.cutoff, e, c), chart);
  }
  return out;
}

}  // namespace cubic
