#include "cubic/oracle.hpp"

#include <functional>
#include <stdexcept>

namespace cubic::oracle {

namespace {

int raw_dot(const RawClass& a, const RawClass& b) {
  int s = a[0] * b[0];
  for (int i = 1; i < 7; ++i) s -= a[i] * b[i];
  return s;
}

int raw_degree(const RawClass& a) {
  int s = 3 * a[0];
  for (int i = 1; i < 7; ++i) s -= a[i];
  return s;
}

RawClass raw_boundary(int i) {
  RawClass d{1, 0, 0, 0, 0, 0, 0};
  d[2 * i - 1] = 1;
  d[2 * i] = 1;
  return d;
}

CurveClass to_class(const RawClass& a) { return CurveClass(a[0], a[1], a[2], a[3], a[4], a[5], a[6]); }

RawClass to_raw(const CurveClass& b) {
  RawClass a;
  for (int i = 0; i < 7; ++i) a[i] = b.vector()(i);
  return a;
}

bool matches(const ClassQuery& q, const RawClass& a) {
  if (q.self_intersection && raw_dot(a, a) != *q.self_intersection) return false;
  if (q.degree && raw_degree(a) != *q.degree) return false;
  for (int i = 0; i < 3; ++i)
    if (q.boundary[i] && raw_dot(a, raw_boundary(i + 1)) != *q.boundary[i]) return false;
  return true;
}

}  // namespace

ClassQuery ClassQuery::widened() const {
  ClassQuery w = *this;
  w.bounds.ell_min -= 1;
  w.bounds.ell_max += 1;
  w.bounds.b_min -= 1;
  w.bounds.b_max += 1;
  return w;
}

std::set<CurveClass> enumerate_classes(const ClassQuery& q) {
  const Bounds& B = q.bounds;
  if (B.ell_min > B.ell_max || B.b_min > B.b_max) throw std::invalid_argument("empty bounds");
  std::set<CurveClass> out;
  RawClass a{};
  std::function<void(int)> scan = [&](int pos) {
    if (pos == 7) {
      if (matches(q, a)) out.insert(to_class(a));
      return;
    }
    int lo = pos == 0 ? B.ell_min : B.b_min;
    int hi = pos == 0 ? B.ell_max : B.b_max;
    for (int v = lo; v <= hi; ++v) {
      a[pos] = v;
      scan(pos + 1);
    }
  };
  scan(0);
  return out;
}

bool stable_under_widening(const ClassQuery& q) { return enumerate_classes(q) == enumerate_classes(q.widened()); }

StableEnumeration enumerate_until_stable(ClassQuery q, int max_steps) {
  for (int step = 0; step <= max_steps; ++step) {
    auto here = enumerate_classes(q);
    ClassQuery w = q.widened();
    if (here == enumerate_classes(w)) return {here, q, step};
    q = w;
  }
  throw std::runtime_error("enumeration did not stabilise");
}

const std::vector<RawClass>& line_classes() {
  static const std::vector<RawClass> lines = [] {
    ClassQuery q;
    q.self_intersection = -1;
    q.degree = 1;
    std::vector<RawClass> v;
    for (const auto& c : enumerate_until_stable(q).classes) v.push_back(to_raw(c));
    return v;
  }();
  return lines;
}

EffectivityCertificate certify_effective(const CurveClass& b) {
  const auto& lines = line_classes();
  const RawClass target = to_raw(b);
  EffectivityCertificate cert;
  cert.multiplicities.assign(lines.size(), 0);
  int deg = raw_degree(target);
  if (deg < 0) return cert;
  // Each line has degree 1, so an effective combination uses exactly deg lines.
  RawClass acc{};
  std::function<bool(std::size_t, int)> search = [&](std::size_t from, int left) {
    if (left == 0) return acc == target;
    if (acc[0] > target[0]) return false;
    for (std::size_t i = from; i < lines.size(); ++i) {
      for (int k = 0; k < 7; ++k) acc[k] += lines[i][k];
      ++cert.multiplicities[i];
      if (search(i, left - 1)) return true;
      --cert.multiplicities[i];
      for (int k = 0; k < 7; ++k) acc[k] -= lines[i][k];
    }
    return false;
  };
  cert.effective = search(0, deg);
  if (!cert.effective) cert.multiplicities.assign(lines.size(), 0);
  return cert;
}

ProductComparison direct_product_oracle(const ScatteringDiagram& diagram, const ConePoint& p1, const ConePoint& p2,
                                        int seed) {
  const int d = diagram.cutoff();
  ProductComparison cmp;
  cmp.table = structure_constants(diagram, p1, p2, seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    CoverPoint Q = generic_point(seed + attempt);
    try {
      LaurentElement direct = theta_at(diagram, p1, Q) * theta_at(diagram, p2, Q);
      LaurentElement expanded(d);
      for (const auto& [r, alpha] : cmp.table.entries) expanded = expanded + theta_at(diagram, r, Q) * alpha;
      cmp.endpoint = Q;
      cmp.direct = direct;
      cmp.expanded = expanded;
      cmp.equal = direct == expanded;
      return cmp;
    } catch (const GenericityError&) {
    }
  }
  throw GenericityError("direct_product_oracle: no generic endpoint found");
}

ProductComparison direct_product_oracle(const ConePoint& p1, const ConePoint& p2, int d, int seed) {
  return direct_product_oracle(truncated_diagram(d), p1, p2, seed);
}

}  // namespace cubic::oracle
