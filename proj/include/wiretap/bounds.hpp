#ifndef WIRETAP_BOUNDS_HPP
#define WIRETAP_BOUNDS_HPP

// Converse bounds on the secrecy rate, kept exact (the 1/2 factors make
// half-integer values common).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <boost/rational.hpp>

#include "wiretap/errors.hpp"
#include "wiretap/ldm.hpp"

namespace wiretap {

using Rational = boost::rational<long long>;

struct UpperBounds {
  Rational ub1, ub2, ub3, min_ub;
};

inline UpperBounds upper_bounds(const ChannelParams &p) {
  const auto pos = [](long long x) { return x > 0 ? x : 0LL; };
  const long long n11 = p.n11(), n21 = p.n21(), n2 = p.n2();
  const long long rp = pos(n11 - n2);

  UpperBounds b;
  b.ub1 = Rational(rp) + Rational(std::max(n11, n21) - rp, 2) + Rational(pos(n2 - n21), 2);
  b.ub2 = Rational(n11);
  b.ub3 = Rational(n21 + pos(n11 - n21 - n2) + pos(n2 - n21 - pos(n2 - n11 + n21)));
  b.min_ub = std::min({b.ub1, b.ub2, b.ub3});
  return b;
}

// Deterministic bounds shifted by the Gaussian approximation constant c.
inline UpperBounds gaussian_upper_bounds(const ChannelParams &p, const Rational &c) {
  if (c < 0) throw parameter_error("gap constant c must be nonnegative");
  UpperBounds b = upper_bounds(p);
  b.ub1 += c;
  b.ub2 += c;
  b.ub3 += c;
  b.min_ub += c;
  return b;
}

inline double to_double(const Rational &r) { return boost::rational_cast<double>(r); }

// "6", "9/2" style exact text.
inline std::string to_exact_string(const Rational &r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Fixed-point text; exact whenever the denominator divides 10^digits.
inline std::string to_fixed_string(const Rational &r, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, to_double(r));
  return buf;
}

// Parses "7", "-3", "1/2", "0.05", "2.5e-1" into an exact rational.
inline Rational parse_rational(const std::string &text) {
  const auto fail = [&] { return parameter_error("not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t used_num = 0, used_den = 0;
      const long long num = std::stoll(text.substr(0, slash), &used_num);
      const long long den = std::stoll(text.substr(slash + 1), &used_den);
      if (used_num != slash || used_den != text.size() - slash - 1 || den == 0) throw fail();
      return Rational(num, den);
    }
    std::string mantissa = text;
    long long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
      std::size_t used = 0;
      exponent = std::stoll(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) throw fail();
      mantissa = text.substr(0, e);
    }
    bool negative = false;
    std::size_t i = 0;
    if (i < mantissa.size() && (mantissa[i] == '-' || mantissa[i] == '+')) negative = mantissa[i++] == '-';
    long long num = 0, den = 1;
    bool seen_digit = false, seen_point = false;
    for (; i < mantissa.size(); ++i) {
      const char ch = mantissa[i];
      if (ch == '.' && !seen_point) {
        seen_point = true;
      } else if (ch >= '0' && ch <= '9') {
        if (num > 100'000'000'000'000LL) throw fail();
        num = num * 10 + (ch - '0');
        if (seen_point) den *= 10;
        seen_digit = true;
      } else {
        throw fail();
      }
    }
    if (!seen_digit || std::llabs(exponent) > 15) throw fail();
    Rational r(negative ? -num : num, den);
    for (long long k = 0; k < std::llabs(exponent); ++k) r = exponent > 0 ? r * 10LL : r / 10LL;
    return r;
  } catch (const std::logic_error &) {
    throw fail();
  }
}

} // namespace wiretap

#endif
