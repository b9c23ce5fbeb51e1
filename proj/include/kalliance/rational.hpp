#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace kalliance {

using Rational = boost::rational<std::int64_t>;

/// Floor of a/b for b != 0, exact for negative operands.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

inline std::int64_t floor(const Rational& x) {
  return floor_div(x.numerator(), x.denominator());
}

inline std::int64_t ceil(const Rational& x) {
  return ceil_div(x.numerator(), x.denominator());
}

/// "p/q", always with a denominator (so 2 prints as "2/1").
inline std::string to_string(const Rational& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace kalliance
