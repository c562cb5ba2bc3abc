#include "cubic/series.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace cubic {

DegreeCutoff::DegreeCutoff(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("degree cutoff must be positive");
}

namespace {
void require_same(int a, int b) {
  if (a != b) throw std::invalid_argument("cutoff mismatch");
}
}  // namespace

TruncatedSeries TruncatedSeries::monomial(int cutoff, const CurveClass& b, const Rational& c) {
  TruncatedSeries s(cutoff);
  s.add_term(b, c);
  return s;
}

Rational TruncatedSeries::coefficient(const CurveClass& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const CurveClass& b, const Rational& c) {
  if (c == 0 || degree(b) >= d_) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(int cutoff) const {
  TruncatedSeries s(cutoff);
  for (const auto& [b, c] : terms_) s.add_term(b, c);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same(d_, o.d_);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries s = *this;
  s += o;
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& [b, c] : s.terms_) c = -c;
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  require_same(d_, o.d_);
  TruncatedSeries s(d_);
  for (const auto& [b1, c1] : terms_) {
    int d1 = degree(b1);
    for (const auto& [b2, c2] : o.terms_) {
      if (d1 + degree(b2) >= d_) continue;
      s.add_term(b1 + b2, c1 * c2);
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  TruncatedSeries s(d_);
  for (const auto& [b, x] : terms_) s.add_term(b, x * c);
  return s;
}

LaurentElement LaurentElement::monomial(int cutoff, const Exponent& m, const TruncatedSeries& c) {
  LaurentElement e(cutoff);
  e.add_term(m, c);
  return e;
}

TruncatedSeries LaurentElement::coefficient(const Exponent& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? TruncatedSeries(d_) : it->second;
}

std::size_t LaurentElement::term_count() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n += c.terms().size();
  return n;
}

void LaurentElement::add_term(const Exponent& m, const TruncatedSeries& c) {
  require_same(d_, c.cutoff());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  require_same(d_, o.d_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
  LaurentElement e = *this;
  e += o;
  return e;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement e = *this;
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

LaurentElement LaurentElement::operator-(const LaurentElement& o) const { return *this + (-o); }

LaurentElement LaurentElement::operator*(const LaurentElement& o) const {
  require_same(d_, o.d_);
  LaurentElement e(d_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) e.add_term(m1 + m2, c1 * c2);
  return e;
}

LaurentElement LaurentElement::operator*(const TruncatedSeries& c) const {
  LaurentElement e(d_);
  for (const auto& [m, x] : terms_) e.add_term(m, x * c);
  return e;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
LaurentElement mul(const LaurentElement& a, const LaurentElement& b) { return a * b; }

namespace {

bool in_maximal_ideal(const TruncatedSeries& s) {
  for (const auto& [b, c] : s.terms())
    if (degree(b) <= 0) return false;
  return true;
}

// u = a - 1, required to lie in the maximal ideal.
LaurentElement nilpotent_part(const LaurentElement& a) {
  LaurentElement u = a - LaurentElement::one(a.cutoff());
  for (const auto& [m, c] : u.terms())
    if (!in_maximal_ideal(c)) throw std::domain_error("element is not congruent to 1 mod the maximal ideal");
  return u;
}

}  // namespace

bool is_unit(const LaurentElement& a) {
  LaurentElement u = a - LaurentElement::one(a.cutoff());
  for (const auto& [m, c] : u.terms())
    if (!in_maximal_ideal(c)) return false;
  return true;
}

TruncatedSeries invert_unit(const TruncatedSeries& a) {
  TruncatedSeries u = a - TruncatedSeries::one(a.cutoff());
  if (!in_maximal_ideal(u)) throw std::domain_error("invert_unit: not a unit");
  TruncatedSeries result = TruncatedSeries::one(a.cutoff());
  TruncatedSeries p = TruncatedSeries::one(a.cutoff());
  for (int n = 1; n < a.cutoff(); ++n) {
    p = p * (-u);
    if (p.is_zero()) break;
    result += p;
  }
  return result;
}

LaurentElement invert_unit(const LaurentElement& a) {
  LaurentElement u = nilpotent_part(a);
  LaurentElement result = LaurentElement::one(a.cutoff());
  LaurentElement p = LaurentElement::one(a.cutoff());
  for (int n = 1; n < a.cutoff(); ++n) {
    p = p * (-u);
    if (p.is_zero()) break;
    result += p;
  }
  return result;
}

LaurentElement power(const LaurentElement& a, int e) {
  if (e < 0) return power(invert_unit(a), -e);
  LaurentElement result = LaurentElement::one(a.cutoff());
  LaurentElement base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentElement log_unit(const LaurentElement& a) {
  LaurentElement u = nilpotent_part(a);
  LaurentElement result(a.cutoff());
  LaurentElement p = LaurentElement::one(a.cutoff());
  for (int n = 1; n < a.cutoff(); ++n) {
    p = p * u;
    if (p.is_zero()) break;
    TruncatedSeries scale = TruncatedSeries::one(a.cutoff()) * Rational((n % 2) ? 1 : -1, n);
    result += p * scale;
  }
  return result;
}

LaurentElement exp_nilpotent(const LaurentElement& u) {
  for (const auto& [m, c] : u.terms())
    if (!in_maximal_ideal(c)) throw std::domain_error("exp_nilpotent: argument not nilpotent");
  LaurentElement result = LaurentElement::one(u.cutoff());
  LaurentElement p = LaurentElement::one(u.cutoff());
  for (int n = 1; n < u.cutoff(); ++n) {
    p = p * u * (TruncatedSeries::one(u.cutoff()) * Rational(1, n));
    if (p.is_zero()) break;
    result += p;
  }
  return result;
}

namespace {

std::string coeff_prefix(const Rational& c, bool first) {
  std::string out;
  Rational a = c;
  if (c < 0) {
    out += first ? "-" : " - ";
    a = -c;
  } else if (!first) {
    out += " + ";
  }
  if (a != 1) out += to_string(a) + " ";
  return out;
}

std::string z_power(const CurveClass& b) { return "z^{" + class_name(b) + "}"; }

}  // namespace

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::set<CurveClass> used;
  std::string out;
  bool first = true;
  for (const auto& [b, c] : s.terms()) {
    if (used.count(b)) continue;
    if (b.is_zero()) {
      Rational a = c < 0 ? Rational(-c) : c;
      out += coeff_prefix(c, first);
      if (a == 1) out += "1";
      else out.pop_back();
      used.insert(b);
      first = false;
      continue;
    }
    // Recognise the eight-term sum over the lines meeting one boundary component.
    bool grouped = false;
    for (int i = 1; i <= 3 && !grouped; ++i) {
      auto ls = lines_meeting(i);
      for (const auto& l : ls) {
        CurveClass base = b - l;
        bool all = true;
        for (const auto& l2 : ls) {
          auto it = s.terms().find(base + l2);
          if (it == s.terms().end() || it->second != c || used.count(base + l2)) {
            all = false;
            break;
          }
        }
        if (!all) continue;
        for (const auto& l2 : ls) used.insert(base + l2);
        std::string bn = base.is_zero() ? "" : class_name(base) + "+";
        out += coeff_prefix(c, first) + "Σ_j z^{" + bn + "L" + std::to_string(i) + "j}";
        grouped = true;
        break;
      }
    }
    if (!grouped) {
      out += coeff_prefix(c, first) + z_power(b);
      used.insert(b);
    }
    first = false;
  }
  return out;
}

std::string to_string(const LaurentElement& e, int chart) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    auto cc = cone_coordinates(chart, m);
    std::string mono;
    auto var = [&mono](int label, int p) {
      if (p == 0) return;
      if (!mono.empty()) mono += ' ';
      mono += "X" + std::to_string(label);
      if (p != 1) mono += "^" + std::to_string(p);
    };
    var(chart % 3 + 1, cc(0));
    var((chart + 1) % 3 + 1, cc(1));
    std::string cs = to_string(c);
    bool single = c.terms().size() == 1 || (cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos);
    if (!first) out += " + ";
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (single) {
      out += cs + " " + mono;
    } else {
      out += "(" + cs + ") " + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace cubic
