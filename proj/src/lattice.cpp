#include "cubic/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubic {

CurveClass::CurveClass(int ell, int b11, int b12, int b21, int b22, int b31, int b32) {
  c_ << ell, b11, b12, b21, b22, b31, b32;
}

bool CurveClass::operator<(const CurveClass& o) const {
  return std::lexicographical_compare(c_.data(), c_.data() + 7, o.c_.data(), o.c_.data() + 7);
}

namespace classes {
CurveClass L() { return CurveClass(1, 0, 0, 0, 0, 0, 0); }
CurveClass E(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 2) throw std::invalid_argument("E index out of range");
  ClassVector v = ClassVector::Zero();
  v(2 * (i - 1) + j) = -1;
  return CurveClass(v);
}
CurveClass D(int i) { return L() - E(i, 1) - E(i, 2); }
CurveClass anticanonical() { return D(1) + D(2) + D(3); }
}  // namespace classes

CurveClass BoundaryDivisor::to_class() const {
  return c[0] * classes::D(1) + c[1] * classes::D(2) + c[2] * classes::D(3);
}

int intersect(const CurveClass& a, const CurveClass& b) {
  const auto& x = a.vector();
  const auto& y = b.vector();
  return x(0) * y(0) - x.tail<6>().dot(y.tail<6>());
}

int degree(const CurveClass& b) { return intersect(b, classes::anticanonical()); }

namespace {

// Exhaustive scan of ell in [0,5], b_ij in [-1,2]; wide enough for every class used here.
template <class Pred>
std::vector<CurveClass> scan(Pred pred) {
  std::vector<CurveClass> out;
  ClassVector v;
  for (int ell = 0; ell <= 5; ++ell) {
    v(0) = ell;
    for (int code = 0; code < 4096; ++code) {
      int c = code;
      for (int k = 1; k <= 6; ++k) {
        v(k) = (c & 3) - 1;
        c >>= 2;
      }
      CurveClass b(v);
      if (pred(b)) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CurveClass> lines_all() {
  static const std::vector<CurveClass> cached =
      scan([](const CurveClass& b) { return intersect(b, b) == -1 && degree(b) == 1; });
  return cached;
}

std::vector<CurveClass> lines_meeting(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("boundary index must be 1, 2 or 3");
  std::vector<CurveClass> out;
  for (const auto& b : lines_all()) {
    bool ok = true;
    for (int k = 1; k <= 3; ++k) ok = ok && intersect(b, classes::D(k)) == (k == i ? 1 : 0);
    if (ok) out.push_back(b);
  }
  return out;
}

CurveClass line(int i, int j) {
  auto ls = lines_meeting(i);
  if (j < 1 || j > static_cast<int>(ls.size())) throw std::invalid_argument("line index out of range");
  return ls[j - 1];
}

std::vector<CurveClass> twisted_cubics_triangle() {
  static const std::vector<CurveClass> cached = scan([](const CurveClass& b) {
    return intersect(b, b) == 1 && degree(b) == 3 && intersect(b, classes::D(1)) == 1 &&
           intersect(b, classes::D(2)) == 1 && intersect(b, classes::D(3)) == 1;
  });
  return cached;
}

H2Matrix h2_matrix(Generator g) {
  H2Matrix m = H2Matrix::Zero();
  switch (g) {
    case Generator::S:
      // E_ij -> E_{i+1,j}: coordinate b_ij moves to slot b_{i+1,j}.
      m(0, 0) = 1;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) m(1 + 2 * ((i + 1) % 3) + j, 1 + 2 * i + j) = 1;
      return m;
    case Generator::SInv:
      return h2_matrix(Generator::S).transpose();
    case Generator::T:
      // L -> 2L-E31-E32, E1j -> E1j, E2j -> L-E3j, E3j -> E2j.
      m(0, 0) = 2;
      m(0, 3) = -1;
      m(0, 4) = -1;
      m(1, 1) = 1;
      m(2, 2) = 1;
      m(3, 5) = 1;
      m(4, 6) = 1;
      m(5, 0) = 1;
      m(5, 3) = -1;
      m(6, 0) = 1;
      m(6, 4) = -1;
      return m;
    case Generator::TInv: {
      H2Matrix s = h2_matrix(Generator::S);
      H2Matrix s2 = s * s;
      H2Matrix s5 = s2 * s2 * s;
      return s5 * h2_matrix(Generator::T) * s2;
    }
  }
  return m;
}

CurveClass h2_action(const Word& w, const CurveClass& b) {
  ClassVector v = b.vector();
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = h2_matrix(*it) * v;
  return CurveClass(v);
}

std::string to_string(const CurveClass& b) {
  if (b.is_zero()) return "0";
  std::string out;
  auto term = [&out](int coeff, const std::string& sym) {
    if (coeff == 0) return;
    if (coeff < 0) out += '-';
    else if (!out.empty()) out += '+';
    int a = coeff < 0 ? -coeff : coeff;
    if (a != 1) out += std::to_string(a);
    out += sym;
  };
  term(b.ell(), "L");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) term(-b.b(i, j), "E" + std::to_string(i) + std::to_string(j));
  return out;
}

namespace {

std::string d_part(const std::array<int, 3>& c) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "D" + std::to_string(i + 1);
  }
  return out;
}

// Named atoms grouped by the number of lines they contain.
const std::array<std::map<CurveClass, std::string>, 3>& atom_names() {
  static const std::array<std::map<CurveClass, std::string>, 3> names = [] {
    std::array<std::map<CurveClass, std::string>, 3> m;
    m[0].emplace(CurveClass(), "");
    for (int i = 1; i <= 3; ++i) {
      auto ls = lines_meeting(i);
      auto nm = [i](int j) { return "L" + std::to_string(i) + std::to_string(j + 1); };
      for (int j = 0; j < 8; ++j) m[1].emplace(ls[j], nm(j));
      for (int j = 0; j < 8; ++j)
        for (int k = j; k < 8; ++k) m[2].emplace(ls[j] + ls[k], nm(j) + "+" + nm(k));
    }
    return m;
  }();
  return names;
}

}  // namespace

std::string class_name(const CurveClass& b) {
  for (const auto& atoms : atom_names())
    for (int total = 0; total <= 12; ++total)
      for (int c1 = 0; c1 <= total; ++c1)
        for (int c2 = 0; c1 + c2 <= total; ++c2) {
          std::array<int, 3> c{c1, c2, total - c1 - c2};
          auto it = atoms.find(b - BoundaryDivisor{c}.to_class());
          if (it == atoms.end()) continue;
          std::string d = d_part(c);
          if (it->second.empty()) return d.empty() ? "0" : d;
          return d.empty() ? it->second : d + "+" + it->second;
        }
  return to_string(b);
}

}  // namespace cubic
