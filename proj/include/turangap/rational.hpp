#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turangap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
  return r.str();  // "p/q" or "p"
}

/// Accepts "8/13", "0.9415", "3", "-1/2". Decimal digits convert exactly.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("cannot parse rational: " + s); };
  // Base-10 by hand: BigInt's own string constructor would read a leading
  // zero ("0.125" -> digits "0125") as octal.
  auto parse_int = [&](std::string_view t) {
    bool neg = !t.empty() && (t[0] == '-' || t[0] == '+');
    bool minus = !t.empty() && t[0] == '-';
    if (neg) t.remove_prefix(1);
    if (t.empty()) bad();
    BigInt v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') bad();
      v = v * 10 + (c - '0');
    }
    return minus ? -v : v;
  };
  if (s.empty()) bad();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_int(std::string_view(s).substr(0, slash));
    BigInt den = parse_int(std::string_view(s).substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  BigInt num = parse_int(digits);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(num, den);
}

/// Exact binary expansion of the double.
inline Rational rational_from_double(double x) { return Rational(x); }

}  // namespace turangap
