#include "cubic/theta.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace cubic {

LaurentElement BrokenLine::monomial() const {
  const Segment& s = final_segment();
  return LaurentElement::monomial(s.coefficient.cutoff(), s.exponent, s.coefficient);
}

std::vector<int> BrokenLine::f_slopes() const {
  const PLFunction F = PLFunction::canonical();
  std::vector<int> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    CoverPoint sample;
    CoverPoint m = to_point(segments[i].exponent);
    if (junctions.empty()) sample = endpoint;
    else if (i == 0) sample = junctions.front().point + m;
    else if (i == segments.size() - 1) sample = (junctions.back().point + endpoint) / Rational(2);
    else sample = (junctions[i - 1].point + junctions[i].point) / Rational(2);
    out.push_back(F.linear(cover_cone(sample), Direction(-segments[i].exponent)));
  }
  return out;
}

namespace {

struct Path {
  std::vector<Junction> junctions;  // backward order
  std::vector<int> walls;
  Exponent initial;
};

class Search {
 public:
  Search(const ScatteringDiagram& diagram, const ConePoint& q) : D_(diagram), d_(diagram.cutoff()), q_(q) {
    qa_ = lift_lattice(q, Sheet::First);
    qb_ = -qa_;
    hq_ = height(q);
  }

  std::vector<Path> run(const CoverPoint& Q) {
    if (Q(0) == 0 && Q(1) == 0) throw GenericityError("endpoint at the origin");
    for (const auto& w : D_.walls()) {
      CoverPoint wp = to_point(w.direction);
      if (det(wp, Q) == 0 && wp.dot(Q) > 0) throw GenericityError("endpoint lies on a wall");
    }
    const PLFunction F = PLFunction::canonical();
    int k = cover_cone(Q);
    int box = hq_ + d_;
    std::vector<Junction> trail;
    std::vector<int> ids;
    for (int x = -box; x <= box; ++x)
      for (int y = -box; y <= box; ++y) {
        Direction m(x, y);
        if (m.isZero()) continue;
        int deg = hq_ + F.linear(k, m);
        if (deg < 0 || deg >= d_) continue;
        walk(Q, m, deg, trail, ids);
      }
    return std::move(found_);
  }

  const LaurentElement& power_of(int wall, int e) {
    auto key = std::make_pair(wall, e);
    auto it = powers_.find(key);
    if (it == powers_.end()) it = powers_.emplace(key, power(D_.walls()[wall].factor(), e)).first;
    return it->second;
  }

 private:
  int reach(const Direction& m) const { return std::min(height(Direction(m - qa_)), height(Direction(m - qb_))); }

  void walk(const CoverPoint& P, const Direction& m, int deg, std::vector<Junction>& trail, std::vector<int>& ids) {
    if (deg < 0 || reach(m) > deg) return;
    CoverPoint mp = to_point(m);
    if (det(P, mp) == 0 && P.dot(mp) < 0) throw GenericityError("broken line would pass through the origin");
    const auto& walls = D_.walls();
    int best = -1;
    bool tie = false;
    Rational best_s;
    for (int i = 0; i < static_cast<int>(walls.size()); ++i) {
      CoverPoint w = to_point(walls[i].direction);
      Rational dm = det(mp, w);
      if (dm == 0) continue;
      Rational s = det(w, P) / dm;
      if (s <= 0) continue;
      if (det(P, mp) / det(w, mp) <= 0) continue;
      if (best < 0 || s < best_s) {
        best = i;
        best_s = s;
        tie = false;
      } else if (s == best_s) {
        tie = true;
      }
    }
    if (best < 0) {
      if (deg == 0 && (m == qa_ || m == qb_)) found_.push_back(Path{trail, ids, m});
      return;
    }
    if (tie) throw GenericityError("two walls met at one point");
    const Ray& W = walls[best];
    const Direction& w = W.direction;
    CoverPoint X = P + mp * best_s;
    Direction n(-w(1), w(0));
    if (n.dot(m) < 0) n = -n;
    int e = n.dot(m);
    bool boundary = W.is_boundary();
    int deg_after = deg - (boundary ? e : 0);
    if (deg_after < 0) return;
    int hw = height(w);
    const LaurentElement& g = power_of(best, e);
    for (int j = 0; j * hw <= deg_after; ++j) {
      if (g.coefficient(Direction(-j * w)).is_zero()) continue;
      trail.push_back(Junction{w, boundary, e, j, X});
      ids.push_back(best);
      walk(X, Direction(m + j * w), deg_after - j * hw, trail, ids);
      trail.pop_back();
      ids.pop_back();
    }
  }

  const ScatteringDiagram& D_;
  int d_;
  ConePoint q_;
  Direction qa_, qb_;
  int hq_;
  std::map<std::pair<int, int>, LaurentElement> powers_;
  std::vector<Path> found_;
};

}  // namespace

std::vector<BrokenLine> broken_lines(const ScatteringDiagram& diagram, const ConePoint& q, const CoverPoint& Q) {
  if (q.is_origin()) throw std::invalid_argument("broken_lines: q must be nonzero");
  if (!q.is_lattice()) throw std::invalid_argument("broken_lines: q must be a lattice point");
  Search search(diagram, q);
  std::vector<Path> paths = search.run(Q);
  int d = diagram.cutoff();
  Direction qa = lift_lattice(q, Sheet::First);
  std::vector<BrokenLine> out;
  for (auto& p : paths) {
    BrokenLine line;
    line.source = q;
    line.sheet = p.initial == qa ? Sheet::First : Sheet::Second;
    line.endpoint = Q;
    line.junctions.assign(p.junctions.rbegin(), p.junctions.rend());
    std::vector<int> ids(p.walls.rbegin(), p.walls.rend());
    Exponent m = p.initial;
    TruncatedSeries c = TruncatedSeries::one(d);
    line.segments.push_back(Segment{m, c});
    for (std::size_t i = 0; i < line.junctions.size(); ++i) {
      const Junction& J = line.junctions[i];
      Direction step = J.term * J.ray;
      c = c * search.power_of(ids[i], J.exponent).coefficient(Direction(-step));
      m = m - step;
      line.segments.push_back(Segment{m, c});
    }
    if (!c.is_zero()) out.push_back(std::move(line));
  }
  return out;
}

std::vector<BrokenLine> broken_lines(const ConePoint& q, const CoverPoint& Q, int d) {
  return broken_lines(truncated_diagram(d), q, Q);
}

LaurentElement theta_at(const ScatteringDiagram& diagram, const ConePoint& q, const CoverPoint& Q) {
  int d = diagram.cutoff();
  if (q.is_origin()) return LaurentElement::one(d);
  LaurentElement out(d);
  for (const auto& line : broken_lines(diagram, q, Q)) out += line.monomial();
  return out;
}

LaurentElement theta_at(const ConePoint& q, const CoverPoint& Q, int d) {
  return theta_at(truncated_diagram(d), q, Q);
}

CoverPoint generic_point(int index) {
  static const int sector[12][2] = {{3, 1},   {1, 3},   {-1, 3}, {-2, 3}, {-3, 2}, {-3, 1},
                                    {-3, -1}, {-1, -3}, {1, -3}, {2, -3}, {3, -2}, {3, -1}};
  static const int primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                               163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227};
  int k = ((index % 1000) + 1000) % 1000;
  int s = k % 12;
  int round = k / 12;
  Rational dx(round + 2, primes[(k + round) % 24]);
  Rational dy(2 * round + 3, primes[(k + round + 7) % 24]);
  return CoverPoint(Rational(sector[s][0]) + dx, Rational(sector[s][1]) - dy);
}

CoverPoint basepoint_near(const Direction& r, int max_height, int attempt) {
  if (r.isZero()) return generic_point(attempt);
  CoverPoint rp = to_point(r);
  CoverPoint u = generic_point(attempt);
  std::vector<CoverPoint> lines;
  for (int x = 0; x <= max_height; ++x)
    for (int y = -max_height; y <= max_height; ++y) {
      Direction w(x, y);
      if (w.isZero() || (x == 0 && y < 0) || !is_primitive(w) || height(w) > max_height) continue;
      lines.push_back(to_point(w));
    }
  Rational eps(1, 16);
  for (int iter = 0; iter < 64; ++iter, eps /= 4) {
    CoverPoint z = rp + u * eps;
    bool ok = true;
    for (const auto& w : lines) {
      int sz = sign(det(w, z));
      int sr = sign(det(w, rp));
      if (sz == 0 || (sr != 0 && sz != sr)) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  throw GenericityError("no valid basepoint near r");
}

namespace {

constexpr int kMaxAttempts = 64;

void coefficient_product(const LaurentElement& a, const LaurentElement& b, const Direction& r, TruncatedSeries& out) {
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(Direction(r - m));
    if (it != b.terms().end()) out += c * it->second;
  }
}

std::vector<ConePoint> lattice_points_up_to(int H) {
  std::vector<ConePoint> out{ConePoint::origin()};
  for (int i = 1; i <= 3; ++i)
    for (int a = 1; a <= H; ++a)
      for (int b = 0; a + b <= H; ++b) out.emplace_back(i, a, b);
  return out;
}

}  // namespace

StructureConstantTable structure_constants(const ScatteringDiagram& diagram, const ConePoint& p1,
                                           const ConePoint& p2, int seed) {
  int d = diagram.cutoff();
  StructureConstantTable table;
  table.p1 = p1;
  table.p2 = p2;
  table.cutoff = d;
  if (p1.is_origin() || p2.is_origin()) {
    table.entries.emplace(p1.is_origin() ? p2 : p1, TruncatedSeries::one(d));
    return table;
  }
  int H = height(p1) + height(p2);
  for (const auto& r : lattice_points_up_to(H)) {
    int hr = r.is_origin() ? 0 : height(r);
    if (H - hr >= d) continue;
    Direction rt = r.is_origin() ? Direction(0, 0) : lift_lattice(r, Sheet::First);
    std::optional<CoverPoint> z;
    LaurentElement t1(d), t2(d);
    for (int attempt = seed; attempt < seed + kMaxAttempts && !z; ++attempt) {
      try {
        CoverPoint cand = basepoint_near(rt, H + d, attempt);
        t1 = theta_at(diagram, p1, cand);
        t2 = theta_at(diagram, p2, cand);
        z = cand;
      } catch (const GenericityError&) {
      }
    }
    if (!z) throw GenericityError("structure_constants: no generic basepoint found");
    TruncatedSeries alpha(d);
    coefficient_product(t1, t2, rt, alpha);
    if (alpha.is_zero()) continue;
    for (const auto& [b, c] : alpha.terms())
      if (!is_integer(c)) throw std::runtime_error("non-integral structure constant at r = " + to_string(r));
    table.entries.emplace(r, alpha);
    table.basepoints.emplace(r, *z);
  }
  return table;
}

StructureConstantTable structure_constants(const ConePoint& p1, const ConePoint& p2, int d, int seed) {
  return structure_constants(truncated_diagram(d), p1, p2, seed);
}

namespace {

CoverPoint chamber_point(const Direction& u, const Direction& v, int attempt) {
  Rational a = Rational(5, 11) + Rational(attempt, 97);
  Rational b = Rational(4, 13) + Rational(attempt * attempt + 1, 89);
  return to_point(u) * a + to_point(v) * b;
}

struct Chamber {
  CoverPoint point;
  LaurentElement theta{1};
};

Chamber chamber_theta(const ScatteringDiagram& D, const ConePoint& q, const Direction& u, const Direction& v) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CoverPoint Q = chamber_point(u, v, attempt);
    try {
      return Chamber{Q, theta_at(D, q, Q)};
    } catch (const GenericityError&) {
    }
  }
  throw GenericityError("no generic point in chamber");
}

std::string describe(const Direction& m) {
  std::ostringstream s;
  s << "(" << m(0) << "," << m(1) << ")";
  return s.str();
}

}  // namespace

ConsistencyReport verify_consistency(const ScatteringDiagram& D, const ConePoint& q) {
  ConsistencyReport rep;
  auto fail = [&rep](const std::string& msg) {
    if (rep.passed) rep.counterexample = msg;
    rep.passed = false;
  };
  const auto& rays = cover_rays();
  // Chambers of each cover cone, in angular order.
  std::vector<std::vector<Chamber>> cones(6);
  std::vector<std::vector<const Ray*>> interior(6);
  for (int k = 0; k < 6; ++k) {
    for (const auto& w : D.walls())
      if (!w.is_boundary() && cover_cone(w.direction) == k) interior[k].push_back(&w);
    std::vector<Direction> dirs{rays[k]};
    for (const Ray* w : interior[k]) dirs.push_back(w->direction);
    dirs.push_back(rays[(k + 1) % 6]);
    for (std::size_t c = 0; c + 1 < dirs.size(); ++c) cones[k].push_back(chamber_theta(D, q, dirs[c], dirs[c + 1]));
  }
  for (int k = 0; k < 6; ++k) {
    const auto& ch = cones[k];
    for (std::size_t c = 0; c + 1 < ch.size(); ++c) {
      const Ray& w = *interior[k][c];
      ++rep.checks;
      if (cross_ray(ch[c].theta, w, ch[c].point) != ch[c + 1].theta)
        fail("crossing interior wall " + describe(w.direction) + " for q=" + to_string(q));
    }
    if (ch.size() >= 3) {
      std::vector<Crossing> fwd, back;
      for (std::size_t c = 0; c + 1 < ch.size(); ++c) fwd.push_back(Crossing{*interior[k][c], ch[c].point});
      for (std::size_t c = ch.size() - 1; c >= 1; --c) back.push_back(Crossing{*interior[k][c - 1], ch[c].point});
      ++rep.checks;
      if (path_ordered_product(ch.front().theta, fwd) != ch.back().theta)
        fail("path-ordered product across cone " + std::to_string(k) + " for q=" + to_string(q));
      ++rep.checks;
      if (path_ordered_product(ch.back().theta, back) != ch.front().theta)
        fail("reverse path-ordered product across cone " + std::to_string(k) + " for q=" + to_string(q));
    }
  }
  for (int k = 0; k < 6; ++k) {
    const Ray* ray = nullptr;
    for (const auto& w : D.walls())
      if (w.direction == rays[k]) ray = &w;
    const Chamber& near = cones[(k + 5) % 6].back();
    const Chamber& far = cones[k].front();
    Direction n = source_normal(rays[k], near.point);
    int d = D.cutoff();
    LaurentElement near_pos(d), near_neg(d), far_pos(d), far_neg(d);
    for (const auto& [m, c] : near.theta.terms())
      (n.dot(m) >= 0 ? near_pos : near_neg).add_term(m, c);
    for (const auto& [m, c] : far.theta.terms())
      (n.dot(m) >= 0 ? far_pos : far_neg).add_term(m, c);
    ++rep.checks;
    if (cross_ray(near_pos, *ray, near.point) != far_pos)
      fail("boundary ray " + describe(rays[k]) + " outgoing part for q=" + to_string(q));
    ++rep.checks;
    if (cross_ray(far_neg, *ray, far.point) != near_neg)
      fail("boundary ray " + describe(rays[k]) + " incoming part for q=" + to_string(q));
  }
  return rep;
}

ConsistencyReport verify_consistency(const ConePoint& q, int d) { return verify_consistency(truncated_diagram(d), q); }

TruncatedSeries line_sum(int i, int d) {
  TruncatedSeries s(d);
  for (const auto& l : lines_meeting(i)) s.add_term(l, 1);
  return s;
}

TruncatedSeries twisted_cubic_sum(int d) {
  TruncatedSeries s(d);
  for (const auto& b : twisted_cubics_triangle()) s.add_term(b, 1);
  return s;
}

namespace {
std::string theta_key(int i, bool square) { return "theta" + std::to_string(i) + (square ? "^2" : ""); }
}  // namespace

std::map<std::string, TruncatedSeries> expected_mirror_coefficients(int d) {
  std::map<std::string, TruncatedSeries> out;
  for (int i = 1; i <= 3; ++i) {
    TruncatedSeries zd = TruncatedSeries::monomial(d, classes::D(i));
    out.emplace(theta_key(i, true), zd);
    out.emplace(theta_key(i, false), line_sum(i, d) * zd);
  }
  out.emplace("1", twisted_cubic_sum(d) + TruncatedSeries::monomial(d, classes::anticanonical(), 4));
  return out;
}

std::map<ConePoint, TruncatedSeries> triple_product_expansion(const ScatteringDiagram& D, int seed) {
  int d = D.cutoff();
  std::map<ConePoint, TruncatedSeries> gamma;
  auto first = structure_constants(D, ConePoint::vertex(1), ConePoint::vertex(2), seed);
  for (const auto& [r, a] : first.entries) {
    auto second = structure_constants(D, r, ConePoint::vertex(3), seed);
    for (const auto& [s, b] : second.entries) {
      auto it = gamma.emplace(s, TruncatedSeries(d)).first;
      it->second += a * b;
    }
  }
  for (auto it = gamma.begin(); it != gamma.end();)
    it = it->second.is_zero() ? gamma.erase(it) : std::next(it);
  return gamma;
}

bool MirrorReport::coefficients_match() const {
  if (!unexpected.empty()) return false;
  for (const auto& [k, v] : expected) {
    auto it = found.find(k);
    TruncatedSeries f = it == found.end() ? TruncatedSeries(cutoff) : it->second;
    if (f != v) return false;
  }
  for (const auto& [k, v] : found)
    if (!expected.count(k) && !v.is_zero()) return false;
  return true;
}

MirrorReport verify_mirror_equation(const ScatteringDiagram& D, int seed) {
  int d = D.cutoff();
  MirrorReport rep;
  rep.cutoff = d;
  rep.expected = expected_mirror_coefficients(d);
  rep.residual = LaurentElement(d);
  bool done = false;
  for (int attempt = seed; attempt < seed + kMaxAttempts && !done; ++attempt) {
    CoverPoint Q = generic_point(attempt);
    try {
      std::array<LaurentElement, 3> th{LaurentElement(d), LaurentElement(d), LaurentElement(d)};
      for (int i = 0; i < 3; ++i) th[i] = theta_at(D, ConePoint::vertex(i + 1), Q);
      LaurentElement lhs = th[0] * th[1] * th[2];
      LaurentElement rhs = LaurentElement::one(d) * rep.expected.at("1");
      for (int i = 0; i < 3; ++i) {
        rhs += th[i] * th[i] * rep.expected.at(theta_key(i + 1, true));
        rhs += th[i] * rep.expected.at(theta_key(i + 1, false));
      }
      rep.residual = lhs - rhs;
      rep.endpoint = Q;
      done = true;
    } catch (const GenericityError&) {
    }
  }
  if (!done) throw GenericityError("verify_mirror_equation: no generic endpoint found");
  // theta_{2 v_i} = theta_i^2 - 2 z^{D_j + D_k}.
  TruncatedSeries constant(d);
  for (const auto& [s, g] : triple_product_expansion(D, seed)) {
    bool matched = false;
    for (int i = 1; i <= 3; ++i) {
      if (s == ConePoint(i, 2, 0)) {
        rep.found.insert_or_assign(theta_key(i, true), g);
        CurveClass djk = classes::anticanonical() - classes::D(i);
        constant += g * TruncatedSeries::monomial(d, djk, -2);
        matched = true;
      } else if (s == ConePoint::vertex(i)) {
        rep.found.insert_or_assign(theta_key(i, false), g);
        matched = true;
      }
    }
    if (s.is_origin()) {
      constant += g;
      matched = true;
    }
    if (!matched) rep.unexpected.push_back(to_string(s));
  }
  rep.found.insert_or_assign("1", constant);
  return rep;
}

MirrorReport verify_mirror_equation(int d, int seed) { return verify_mirror_equation(truncated_diagram(d), seed); }

TruncatedSeries frobenius_constant_term(const ScatteringDiagram& D, int seed) {
  auto gamma = triple_product_expansion(D, seed);
  auto it = gamma.find(ConePoint::origin());
  return it == gamma.end() ? TruncatedSeries(D.cutoff()) : it->second;
}

TruncatedSeries frobenius_constant_term(int d, int seed) { return frobenius_constant_term(truncated_diagram(d), seed); }

}  // namespace cubic
