#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cubic/word.hpp"

namespace cubic {

// Coordinates (ell, b11, b12, b21, b22, b31, b32) of beta = ell*L - sum b_ij E_ij.
using ClassVector = Eigen::Matrix<int, 7, 1>;
using H2Matrix = Eigen::Matrix<int, 7, 7>;

class CurveClass {
 public:
  CurveClass() : c_(ClassVector::Zero()) {}
  explicit CurveClass(const ClassVector& c) : c_(c) {}
  CurveClass(int ell, int b11, int b12, int b21, int b22, int b31, int b32);

  int ell() const { return c_(0); }
  // i in {1,2,3}, j in {1,2}.
  int b(int i, int j) const { return c_(2 * (i - 1) + j); }
  const ClassVector& vector() const { return c_; }
  bool is_zero() const { return c_.isZero(); }

  CurveClass operator+(const CurveClass& o) const { return CurveClass(ClassVector(c_ + o.c_)); }
  CurveClass operator-(const CurveClass& o) const { return CurveClass(ClassVector(c_ - o.c_)); }
  CurveClass operator-() const { return CurveClass(ClassVector(-c_)); }
  CurveClass& operator+=(const CurveClass& o) {
    c_ += o.c_;
    return *this;
  }
  friend CurveClass operator*(int k, const CurveClass& a) { return CurveClass(ClassVector(k * a.c_)); }

  bool operator==(const CurveClass& o) const { return c_ == o.c_; }
  bool operator!=(const CurveClass& o) const { return !(*this == o); }
  // Lexicographic on (ell, b11, ..., b32).
  bool operator<(const CurveClass& o) const;

 private:
  ClassVector c_;
};

namespace classes {
CurveClass L();
CurveClass E(int i, int j);
CurveClass D(int i);
// D1 + D2 + D3.
CurveClass anticanonical();
}  // namespace classes

struct BoundaryDivisor {
  std::array<int, 3> c{0, 0, 0};
  CurveClass to_class() const;
};

int intersect(const CurveClass& a, const CurveClass& b);
int degree(const CurveClass& b);

// The 27 (-1)-curves in lexicographic order.
std::vector<CurveClass> lines_all();
// The 8 lines meeting D_i and disjoint from the other two boundary components. Throws on bad index.
std::vector<CurveClass> lines_meeting(int i);
// The 24 classes pi^*H: self-intersection 1, degree 3, meeting each D_i once.
std::vector<CurveClass> twisted_cubics_triangle();

// Integer matrix of g^* on coordinate vectors. T^-1 is realised by the positive word S^5.T.S^2.
H2Matrix h2_matrix(Generator g);
// Applies the letters right to left (innermost first).
CurveClass h2_action(const Word& w, const CurveClass& b);

// "2L-E11-E21-E22-E31-E32", "0" for the zero class.
std::string to_string(const CurveClass& b);
// Name in the boundary/line notation when one exists ("D3+L31", "2D1+D2"), else the E-basis string.
std::string class_name(const CurveClass& b);
// The j-th element of lines_meeting(i), 1-based.
CurveClass line(int i, int j);

}  // namespace cubic
