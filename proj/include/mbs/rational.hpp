#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "mbs/error.hpp"

namespace mbs {

/// Exact rational coordinate. All geometric predicates are evaluated on
/// these, so there is no tolerance anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Largest integer not greater than q.
inline BigInt floor_big(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

inline std::int64_t floor_to_int64(const Rational& q) {
  BigInt f = floor_big(q);
  if (f > std::numeric_limits<std::int64_t>::max() ||
      f < std::numeric_limits<std::int64_t>::min()) {
    throw ValidationError("coordinate ratio out of 64-bit range");
  }
  return f.convert_to<std::int64_t>();
}

inline BigInt ceil_big(const Rational& q) { return -floor_big(-q); }

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw ValidationError("bad rational: '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw ValidationError("bad rational: '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator: '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Canonical text form: "p" for integers, "p/q" in lowest terms otherwise.
inline std::string format_rational(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  std::string out = boost::multiprecision::numerator(q).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace mbs
