#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "graphinv/error.hpp"

namespace graphinv {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "p", "p/q", or a plain decimal literal such as "-0.125".
/// Exponent notation is rejected. The result is exact.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw Error(ErrorCode::Parse, std::string(why) + " in weight '" + std::string(text) + "'");
  };
  if (text.empty()) return fail("empty literal");

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };

  std::size_t int_end = digits(pos);
  std::string integral(text.substr(pos, int_end - pos));

  if (int_end < text.size() && text[int_end] == '/') {
    if (integral.empty()) return fail("missing numerator");
    std::size_t den_end = digits(int_end + 1);
    std::string den(text.substr(int_end + 1, den_end - int_end - 1));
    if (den.empty() || den_end != text.size()) return fail("malformed denominator");
    mpz_class d(den, 10);
    if (d == 0) return fail("zero denominator");
    Rational r(mpz_class(integral, 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  std::string fraction;
  std::size_t end = int_end;
  if (end < text.size() && text[end] == '.') {
    std::size_t frac_end = digits(end + 1);
    fraction = std::string(text.substr(end + 1, frac_end - end - 1));
    end = frac_end;
  }
  if (end != text.size()) return fail("unexpected character");
  if (integral.empty() && fraction.empty()) return fail("no digits");

  mpz_class numerator((integral.empty() ? std::string("0") : integral) + fraction, 10);
  mpz_class denominator = 1;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction.size());
  Rational r(numerator, denominator);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace graphinv
