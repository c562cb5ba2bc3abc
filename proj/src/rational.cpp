#include "cubic/rational.hpp"

#include <stdexcept>

namespace cubic {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  auto check_int = [](const std::string& x) {
    std::size_t k = (x.size() > 0 && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (k == x.size()) return false;
    for (; k < x.size(); ++k)
      if (x[k] < '0' || x[k] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(t)) throw std::invalid_argument("malformed rational: " + t);
    return Rational(boost::multiprecision::mpz_int(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!check_int(num) || !check_int(den)) throw std::invalid_argument("malformed rational: " + t);
  boost::multiprecision::mpz_int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + t);
  return Rational(n, d);
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

int sign(const Rational& r) { return r.sign(); }

}  // namespace cubic
