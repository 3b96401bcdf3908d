#pragma once

#include <boost/rational.hpp>
#include <string>

#include "orbittie/errors.hpp"

namespace orbittie {

/// Exact rational values for coalition worths. Stabilizer membership is the
/// exact test sigma.v = v, so floating point is rejected at the parse layer.
using Rational = boost::rational<long long>;

/// Parses "p", "-p", or "p/q" (q > 0 after normalization).
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      long long num = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters in rational: " + text);
      return Rational(num);
    }
    std::size_t used_n = 0, used_d = 0;
    long long num = std::stoll(text.substr(0, slash), &used_n);
    long long den = std::stoll(text.substr(slash + 1), &used_d);
    if (used_n != slash || used_d != text.size() - slash - 1) {
      throw ParseError("trailing characters in rational: " + text);
    }
    if (den == 0) throw ParseError("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: " + text);
  } catch (const std::out_of_range&) {
    throw ParseError("rational out of range: " + text);
  }
}

/// Canonical form: "p" when integral, else "p/q" with q > 0.
inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace orbittie
