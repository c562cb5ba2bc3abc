#pragma once

#include <map>
#include <string>

#include "cubic/affine.hpp"
#include "cubic/lattice.hpp"
#include "cubic/rational.hpp"

namespace cubic {

// The cutoff d of the ideal I_d spanned by classes of degree >= d.
class DegreeCutoff {
 public:
  explicit DegreeCutoff(int d);
  int value() const { return d_; }
  operator int() const { return d_; }

 private:
  int d_;
};

// Element of Q[P]/I_d.
class TruncatedSeries {
 public:
  using Terms = std::map<CurveClass, Rational>;

  explicit TruncatedSeries(int cutoff) : d_(DegreeCutoff(cutoff)) {}
  static TruncatedSeries one(int cutoff) { return monomial(cutoff, CurveClass(), 1); }
  static TruncatedSeries monomial(int cutoff, const CurveClass& b, const Rational& c = 1);

  int cutoff() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const CurveClass& b) const;
  Rational constant_term() const { return coefficient(CurveClass()); }
  // Adds c*z^b, dropping it when degree(b) >= d.
  void add_term(const CurveClass& b, const Rational& c);
  TruncatedSeries truncated(int cutoff) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& c) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  bool operator==(const TruncatedSeries& o) const { return d_ == o.d_ && terms_ == o.terms_; }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  int d_;
  Terms terms_;
};

using Exponent = Direction;

// Element of (Q[P]/I_d)[x^{+-1}, y^{+-1}] on the cover.
class LaurentElement {
 public:
  using Terms = std::map<Exponent, TruncatedSeries, DirectionLess>;

  explicit LaurentElement(int cutoff) : d_(DegreeCutoff(cutoff)) {}
  static LaurentElement one(int cutoff) { return monomial(cutoff, Exponent(0, 0), TruncatedSeries::one(cutoff)); }
  static LaurentElement monomial(int cutoff, const Exponent& m, const TruncatedSeries& c);
  static LaurentElement monomial(int cutoff, const Exponent& m) {
    return monomial(cutoff, m, TruncatedSeries::one(cutoff));
  }

  int cutoff() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TruncatedSeries coefficient(const Exponent& m) const;
  // Number of (class, exponent) pairs.
  std::size_t term_count() const;
  void add_term(const Exponent& m, const TruncatedSeries& c);

  LaurentElement operator+(const LaurentElement& o) const;
  LaurentElement operator-(const LaurentElement& o) const;
  LaurentElement operator-() const;
  LaurentElement operator*(const LaurentElement& o) const;
  LaurentElement operator*(const TruncatedSeries& c) const;
  LaurentElement& operator+=(const LaurentElement& o);
  bool operator==(const LaurentElement& o) const { return d_ == o.d_ && terms_ == o.terms_; }
  bool operator!=(const LaurentElement& o) const { return !(*this == o); }

 private:
  int d_;
  Terms terms_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
LaurentElement mul(const LaurentElement& a, const LaurentElement& b);

// Geometric-series inverse of an element congruent to 1 mod the maximal ideal.
// Throws std::domain_error for non-units.
TruncatedSeries invert_unit(const TruncatedSeries& a);
LaurentElement invert_unit(const LaurentElement& a);

// a^e for any integer e; negative powers require a unit.
LaurentElement power(const LaurentElement& a, int e);

// log(1+u) and exp(u) for u in the maximal ideal. Throw std::domain_error otherwise.
LaurentElement log_unit(const LaurentElement& a);
LaurentElement exp_nilpotent(const LaurentElement& u);

// Whether a - 1 has all classes of positive degree.
bool is_unit(const LaurentElement& a);

// Text form: "1 + z^{D3+L31} X1^-1 X2^-1 + ...", with chart variables of cover cone `chart`.
std::string to_string(const TruncatedSeries& s);
std::string to_string(const LaurentElement& e, int chart = 0);

}  // namespace cubic
