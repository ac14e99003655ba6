#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <string>

#include "bra/errors.hpp"

namespace bra {

// All decision paths use exact rational arithmetic; no floating point.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p" when the denominator is 1, otherwise "p/q" in lowest terms, q > 0.
inline std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p" and "p/q" with an optional leading sign on p.
inline Rational parse_rational(const std::string& s) {
  auto fail = [&] { throw ParseError("invalid rational: '" + s + "'"); };
  std::size_t i = 0;
  auto scan_int = [&](bool sign_ok) {
    std::size_t start = i;
    if (sign_ok && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) fail();
    return s.substr(start, i - start);
  };
  std::string num = scan_int(true);
  if (num[0] == '+') num.erase(0, 1);  // GMP's reader takes '-' but not '+'
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = scan_int(false);
  }
  if (i != s.size()) fail();
  if (BigInt(den) == 0) fail();
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace bra
