#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cubic/theta.hpp"

namespace cubic {

// Free coordinates of a class in Z^7 / <F1..F4>.
using QuotientKey = Eigen::Vector3i;

struct QuotientKeyLess {
  bool operator()(const QuotientKey& a, const QuotientKey& b) const {
    return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
  }
};

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

// Smith normal form U A V = S of an integer matrix, U and V unimodular.
struct SmithForm {
  IntMatrix U, S, V;
  std::vector<long> invariants;
};
SmithForm smith_normal_form(const IntMatrix& A);

class SpecializationMap {
 public:
  // F1 = L-E11-E21-E31, F2 = L-E11-E22-E32, F3 = L-E12-E21-E32, F4 = L-E12-E22-E31.
  static const std::array<CurveClass, 4>& relations();

  explicit SpecializationMap(const SmithForm& snf);

  int free_rank() const { return static_cast<int>(free_index_.size()); }
  std::vector<long> torsion_orders() const;
  QuotientKey free_part(const CurveClass& b) const;
  // Class of b in the Z/2 torsion summand.
  int torsion_part(const CurveClass& b) const;
  // The sign character: -1 on the torsion generator.
  int sign(const CurveClass& b) const { return torsion_part(b) ? -1 : 1; }
  // z^b specialises to a constant (+-1).
  bool is_constant(const CurveClass& b) const { return free_part(b).isZero(); }
  int degree(const QuotientKey& k) const;

 private:
  Eigen::Matrix<long, 7, 7> U_;
  std::vector<int> free_index_;
  int torsion_index_ = -1;
  Eigen::Matrix<long, 1, 7> degree_row_;
};

const SpecializationMap& build_specialization();

// Element of Q[quotient]/I_d after applying the sign character.
class SignedQuotientSeries {
 public:
  using Terms = std::map<QuotientKey, Rational, QuotientKeyLess>;
  explicit SignedQuotientSeries(int cutoff) : d_(DegreeCutoff(cutoff)) {}
  int cutoff() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const QuotientKey& k) const;
  void add_term(const QuotientKey& k, const Rational& c);
  SignedQuotientSeries operator+(const SignedQuotientSeries& o) const;
  SignedQuotientSeries operator-(const SignedQuotientSeries& o) const;
  SignedQuotientSeries operator*(const SignedQuotientSeries& o) const;
  bool operator==(const SignedQuotientSeries& o) const { return d_ == o.d_ && terms_ == o.terms_; }
  bool operator!=(const SignedQuotientSeries& o) const { return !(*this == o); }

 private:
  int d_;
  Terms terms_;
};

struct SpecializedRay {
  Direction direction;
  std::vector<SignedQuotientSeries> coefficients;
  bool is_trivial() const;
};

using SpecializedLaurent = std::map<Exponent, SignedQuotientSeries, DirectionLess>;

SignedQuotientSeries specialize(const TruncatedSeries& s);
SpecializedRay specialize(const Ray& r);
SpecializedLaurent specialize(const LaurentElement& e);
bool is_zero(const SpecializedLaurent& e);

// "w^{...}" text with the image of D1+D2+D3 written as D1+D2+D3 when recognised.
std::string to_string(const SignedQuotientSeries& s);

struct CayleyReport {
  int cutoff = 1;
  CoverPoint endpoint;
  std::vector<SpecializedRay> rays;
  bool all_walls_trivial = true;
  // Specialised coefficients of the mirror equation.
  std::array<SignedQuotientSeries, 3> square_coefficients{SignedQuotientSeries(1), SignedQuotientSeries(1),
                                                          SignedQuotientSeries(1)};
  std::array<SignedQuotientSeries, 3> linear_coefficients{SignedQuotientSeries(1), SignedQuotientSeries(1),
                                                          SignedQuotientSeries(1)};
  SignedQuotientSeries constant{1};
  SignedQuotientSeries expected_constant{1};
  // Specialised mirror-equation residual on the canonical thetas.
  SpecializedLaurent residual;
  // Cayley equation on straight-line thetas over the trivial diagram.
  SpecializedLaurent straight_residual;
  // Canonical and straight-line thetas agree after specialisation.
  bool thetas_agree = true;
  bool passed() const;
};

CayleyReport verify_cayley(int d, int seed = 0);

}  // namespace cubic
