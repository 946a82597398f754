#pragma once

#include <boost/rational.hpp>

#include <string>

namespace hampow {

// Exact rational arithmetic for densities and degree thresholds.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

// Accepts "a/b" or a plain integer string.
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& q);

// ceil(q * n) for q >= 0.
long long ceil_scaled(const Rational& q, long long n);

}  // namespace hampow
