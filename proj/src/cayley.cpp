#include "cubic/cayley.hpp"

#include <cstdlib>
#include <optional>

#include <Eigen/LU>

namespace cubic {

SmithForm smith_normal_form(const IntMatrix& A) {
  const long m = A.rows(), n = A.cols();
  IntMatrix S = A;
  IntMatrix U = IntMatrix::Identity(m, m);
  IntMatrix V = IntMatrix::Identity(n, n);
  long t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      long pi = -1, pj = -1;
      for (long i = t; i < m; ++i)
        for (long j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi < 0 || std::labs(S(i, j)) < std::labs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      S.row(t).swap(S.row(pi));
      U.row(t).swap(U.row(pi));
      S.col(t).swap(S.col(pj));
      V.col(t).swap(V.col(pj));
      bool clean = true;
      for (long i = t + 1; i < m; ++i) {
        long q = S(i, t) / S(t, t);
        S.row(i) -= q * S.row(t);
        U.row(i) -= q * U.row(t);
        if (S(i, t) != 0) clean = false;
      }
      for (long j = t + 1; j < n; ++j) {
        long q = S(t, j) / S(t, t);
        S.col(j) -= q * S.col(t);
        V.col(j) -= q * V.col(t);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      long bad = -1;
      for (long i = t + 1; i < m && bad < 0; ++i)
        for (long j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      S.row(t) += S.row(bad);
      U.row(t) += U.row(bad);
    }
    if (S(t, t) == 0) break;
    if (S(t, t) < 0) {
      S.row(t) *= -1;
      U.row(t) *= -1;
    }
  }
  SmithForm out{U, S, V, {}};
  for (long i = 0; i < std::min(m, n); ++i)
    if (S(i, i) != 0) out.invariants.push_back(S(i, i));
  return out;
}

const std::array<CurveClass, 4>& SpecializationMap::relations() {
  using namespace classes;
  static const std::array<CurveClass, 4> f{L() - E(1, 1) - E(2, 1) - E(3, 1), L() - E(1, 1) - E(2, 2) - E(3, 2),
                                           L() - E(1, 2) - E(2, 1) - E(3, 2), L() - E(1, 2) - E(2, 2) - E(3, 1)};
  return f;
}

SpecializationMap::SpecializationMap(const SmithForm& snf) {
  U_ = snf.U;
  int rank = static_cast<int>(snf.invariants.size());
  for (int t = 0; t < rank; ++t) {
    if (snf.invariants[t] == 1) continue;
    if (snf.invariants[t] != 2 || torsion_index_ >= 0) throw std::logic_error("unexpected torsion in the quotient");
    torsion_index_ = t;
  }
  for (int t = rank; t < 7; ++t) free_index_.push_back(t);
  if (free_index_.size() != 3) throw std::logic_error("quotient should have free rank 3");
  // degree(beta) = delta . U^-1 y; it vanishes on the relation coordinates.
  Eigen::Matrix<long, 7, 7> Uinv = Eigen::Matrix<long, 7, 7>::Zero();
  Eigen::Matrix<double, 7, 7> Ud = U_.cast<double>();
  Eigen::Matrix<double, 7, 7> inv = Ud.inverse();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) Uinv(i, j) = std::lround(inv(i, j));
  if (Uinv * U_ != Eigen::Matrix<long, 7, 7>::Identity()) throw std::logic_error("change of basis not unimodular");
  Eigen::Matrix<long, 1, 7> delta;
  delta << 3, -1, -1, -1, -1, -1, -1;
  degree_row_ = delta * Uinv;
}

std::vector<long> SpecializationMap::torsion_orders() const {
  if (torsion_index_ < 0) return {};
  return {2};
}

QuotientKey SpecializationMap::free_part(const CurveClass& b) const {
  Eigen::Matrix<long, 7, 1> y = U_ * b.vector().cast<long>();
  QuotientKey k;
  for (int i = 0; i < 3; ++i) k(i) = static_cast<int>(y(free_index_[i]));
  return k;
}

int SpecializationMap::torsion_part(const CurveClass& b) const {
  if (torsion_index_ < 0) return 0;
  long y = (U_.row(torsion_index_) * b.vector().cast<long>())(0);
  return static_cast<int>(((y % 2) + 2) % 2);
}

int SpecializationMap::degree(const QuotientKey& k) const {
  long d = 0;
  for (int i = 0; i < 3; ++i) d += degree_row_(free_index_[i]) * k(i);
  return static_cast<int>(d);
}

const SpecializationMap& build_specialization() {
  static const SpecializationMap map = [] {
    IntMatrix A(7, 4);
    for (int c = 0; c < 4; ++c) A.col(c) = SpecializationMap::relations()[c].vector().cast<long>();
    return SpecializationMap(smith_normal_form(A));
  }();
  return map;
}

Rational SignedQuotientSeries::coefficient(const QuotientKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SignedQuotientSeries::add_term(const QuotientKey& k, const Rational& c) {
  if (c == 0 || build_specialization().degree(k) >= d_) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SignedQuotientSeries SignedQuotientSeries::operator+(const SignedQuotientSeries& o) const {
  if (d_ != o.d_) throw std::invalid_argument("cutoff mismatch");
  SignedQuotientSeries s = *this;
  for (const auto& [k, c] : o.terms_) s.add_term(k, c);
  return s;
}

SignedQuotientSeries SignedQuotientSeries::operator-(const SignedQuotientSeries& o) const {
  if (d_ != o.d_) throw std::invalid_argument("cutoff mismatch");
  SignedQuotientSeries s = *this;
  for (const auto& [k, c] : o.terms_) s.add_term(k, -c);
  return s;
}

SignedQuotientSeries SignedQuotientSeries::operator*(const SignedQuotientSeries& o) const {
  if (d_ != o.d_) throw std::invalid_argument("cutoff mismatch");
  SignedQuotientSeries s(d_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) s.add_term(QuotientKey(k1 + k2), c1 * c2);
  return s;
}

bool SpecializedRay::is_trivial() const {
  for (const auto& c : coefficients)
    if (!c.is_zero()) return false;
  return true;
}

SignedQuotientSeries specialize(const TruncatedSeries& s) {
  const auto& map = build_specialization();
  SignedQuotientSeries out(s.cutoff());
  for (const auto& [b, c] : s.terms()) out.add_term(map.free_part(b), c * map.sign(b));
  return out;
}

SpecializedRay specialize(const Ray& r) {
  SpecializedRay out{r.direction, {}};
  for (const auto& c : r.coefficients) out.coefficients.push_back(specialize(c));
  while (!out.coefficients.empty() && out.coefficients.back().is_zero()) out.coefficients.pop_back();
  return out;
}

SpecializedLaurent specialize(const LaurentElement& e) {
  SpecializedLaurent out;
  for (const auto& [m, c] : e.terms()) {
    SignedQuotientSeries s = specialize(c);
    if (!s.is_zero()) out.emplace(m, s);
  }
  return out;
}

bool is_zero(const SpecializedLaurent& e) {
  for (const auto& [m, c] : e)
    if (!c.is_zero()) return false;
  return true;
}

std::string to_string(const SignedQuotientSeries& s) {
  if (s.is_zero()) return "0";
  const auto& map = build_specialization();
  std::map<QuotientKey, std::string, QuotientKeyLess> names;
  for (int c1 = 0; c1 <= 3; ++c1)
    for (int c2 = 0; c2 <= 3; ++c2)
      for (int c3 = 0; c3 <= 3; ++c3) {
        BoundaryDivisor d{{c1, c2, c3}};
        QuotientKey k = map.free_part(d.to_class());
        if (names.count(k)) continue;
        std::string nm;
        for (int i = 0; i < 3; ++i) {
          if (d.c[i] == 0) continue;
          if (!nm.empty()) nm += "+";
          if (d.c[i] != 1) nm += std::to_string(d.c[i]);
          nm += "D" + std::to_string(i + 1);
        }
        names.emplace(k, nm);
      }
  std::string out;
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    Rational a = c < 0 ? Rational(-c) : c;
    out += c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    auto it = names.find(k);
    bool unit = it != names.end() && it->second.empty();
    if (a != 1 || unit) out += to_string(a);
    if (!unit) {
      if (a != 1) out += " ";
      if (it != names.end()) out += "z^{" + it->second + "}";
      else out += "w^{" + std::to_string(k(0)) + "," + std::to_string(k(1)) + "," + std::to_string(k(2)) + "}";
    }
    first = false;
  }
  return out;
}

bool CayleyReport::passed() const {
  if (!all_walls_trivial || !thetas_agree) return false;
  for (const auto& c : linear_coefficients)
    if (!c.is_zero()) return false;
  return constant == expected_constant && is_zero(residual) && is_zero(straight_residual);
}

CayleyReport verify_cayley(int d, int seed) {
  CayleyReport rep;
  rep.cutoff = d;
  ScatteringDiagram D = truncated_diagram(d);
  for (const auto& r : D.rays()) {
    rep.rays.push_back(specialize(r));
    if (!rep.rays.back().is_trivial()) rep.all_walls_trivial = false;
  }
  auto coeffs = expected_mirror_coefficients(d);
  for (int i = 0; i < 3; ++i) {
    std::string k = "theta" + std::to_string(i + 1);
    rep.square_coefficients[i] = specialize(coeffs.at(k + "^2"));
    rep.linear_coefficients[i] = specialize(coeffs.at(k));
  }
  rep.constant = specialize(coeffs.at("1"));
  rep.expected_constant = specialize(TruncatedSeries::monomial(d, classes::anticanonical(), -4));

  ScatteringDiagram trivial = trivial_diagram(d);
  bool done = false;
  for (int attempt = seed; attempt < seed + 64 && !done; ++attempt) {
    CoverPoint Q = generic_point(attempt);
    try {
      std::array<LaurentElement, 3> th{LaurentElement(d), LaurentElement(d), LaurentElement(d)};
      std::array<LaurentElement, 3> st{LaurentElement(d), LaurentElement(d), LaurentElement(d)};
      for (int i = 0; i < 3; ++i) {
        th[i] = theta_at(D, ConePoint::vertex(i + 1), Q);
        st[i] = theta_at(trivial, ConePoint::vertex(i + 1), Q);
      }
      rep.thetas_agree = true;
      for (int i = 0; i < 3; ++i)
        if (specialize(th[i]) != specialize(st[i])) rep.thetas_agree = false;
      LaurentElement full = th[0] * th[1] * th[2] - LaurentElement::one(d) * coeffs.at("1");
      for (int i = 0; i < 3; ++i) {
        std::string k = "theta" + std::to_string(i + 1);
        full = full - th[i] * th[i] * coeffs.at(k + "^2") - th[i] * coeffs.at(k);
      }
      rep.residual = specialize(full);
      // Cayley form: theta1 theta2 theta3 - sum z^{Di} theta_i^2 + 4 z^D on straight-line thetas.
      LaurentElement cay = st[0] * st[1] * st[2] +
                           LaurentElement::one(d) * TruncatedSeries::monomial(d, classes::anticanonical(), 4);
      for (int i = 0; i < 3; ++i) cay = cay - st[i] * st[i] * TruncatedSeries::monomial(d, classes::D(i + 1));
      rep.straight_residual = specialize(cay);
      rep.endpoint = Q;
      done = true;
    } catch (const GenericityError&) {
    }
  }
  if (!done) throw GenericityError("verify_cayley: no generic endpoint found");
  return rep;
}

}  // namespace cubic
