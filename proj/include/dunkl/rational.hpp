// Exact scalar types and their text forms.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dunkl {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Raised for inputs outside an operation's domain (bad partition, k < 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numeric procedure cannot deliver the requested accuracy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when text cannot be parsed into the requested value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "p", "p/q", and finite decimals ("0.25", "-1.5e3"), all converted exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("not a rational number: '" + std::string(text) + "'"); };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (s.empty()) throw fail();

  auto is_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto int_of = [](std::string v) {
    if (!v.empty() && v[0] == '+') v.erase(0, 1);
    const std::size_t sign = (!v.empty() && v[0] == '-') ? 1 : 0;
    const std::size_t first = v.find_first_not_of('0', sign);
    v.erase(sign, (first == std::string::npos ? v.size() - 1 : first) - sign);
    return BigInt(v);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw fail();
    BigInt d = int_of(den);
    if (d == 0) throw fail();
    return Rational(int_of(num), d);
  }
  if (is_int(s)) return Rational(int_of(s));

  // decimal with optional exponent
  std::string mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string es = s.substr(e + 1);
    if (!is_int(es)) throw fail();
    exp10 = std::stol(es);
    mant = s.substr(0, e);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  std::string digits;
  bool seen_dot = false, any = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any = true;
      if (seen_dot) --exp10;
    } else {
      throw fail();
    }
  }
  if (!any) throw fail();
  // a leading zero would make the integer parser read octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{BigInt(digits)};
  BigInt ten_pow = 1;
  for (long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) ten_pow *= 10;
  value = exp10 < 0 ? value / Rational(ten_pow) : value * Rational(ten_pow);
  return neg ? Rational(-value) : value;
}

}  // namespace dunkl
