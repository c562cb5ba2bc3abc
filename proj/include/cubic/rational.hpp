#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace cubic {

// Exact rational scalar; expression templates off so it behaves as a plain value type inside Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view s);

bool is_integer(const Rational& r);

int sign(const Rational& r);

}  // namespace cubic

namespace Eigen {

template <>
struct NumTraits<cubic::Rational> : GenericNumTraits<cubic::Rational> {
  using Real = cubic::Rational;
  using NonInteger = cubic::Rational;
  using Literal = cubic::Rational;
  using Nested = cubic::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
