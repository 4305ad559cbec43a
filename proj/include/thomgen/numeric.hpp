#pragma once

// Exact integer and rational scalars used throughout the library.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thomgen {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline std::string to_string(const Integer& z) { return z.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Parses "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed rational: '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace thomgen
