#include "hampow/rational.hpp"

#include <stdexcept>

namespace hampow {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + text + "'");
  }
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

long long ceil_scaled(const Rational& q, long long n) {
  if (q < Rational(0)) throw std::invalid_argument("ceil_scaled: negative rational");
  const long long num = q.numerator() * n;
  const long long den = q.denominator();
  return (num + den - 1) / den;
}

}  // namespace hampow
