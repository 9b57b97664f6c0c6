#include "epist/bigint.hpp"

#include "epist/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace epist {

namespace {

// floor(num/den) for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den, r = num % den;
  if (r != 0 && num < 0) --q;
  return q;
}

}  // namespace

std::string to_decimal(const BigRat& v, int frac_digits, Rounding mode) {
  BigInt num = numerator(v), den = denominator(v);  // den > 0 canonically
  BigInt scale = 1;
  for (int i = 0; i < frac_digits; ++i) scale *= 10;
  num *= scale;

  BigInt n;
  switch (mode) {
    case Rounding::Down:
      n = floor_div(num, den);
      break;
    case Rounding::Up:
      n = -floor_div(-num, den);
      break;
    case Rounding::Nearest:
      n = floor_div(2 * num + den, 2 * den);
      break;
  }

  bool neg = n < 0;
  BigInt mag = abs(n);
  std::string digits = mag.str();
  if (digits.size() <= static_cast<std::size_t>(frac_digits))
    digits.insert(0, frac_digits + 1 - digits.size(), '0');
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - frac_digits);
  if (frac_digits > 0) {
    out += '.';
    out += digits.substr(digits.size() - frac_digits);
  }
  return out;
}

BigRat rat_from_decimal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator: " + text);
    return BigRat(num, den);
  }

  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::strtol(s.c_str() + e + 1, nullptr, 10);
    s = s.substr(0, e);
  }
  std::string intpart = s, fracpart;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    intpart = s.substr(0, dot);
    fracpart = s.substr(dot + 1);
  }
  bool neg = !intpart.empty() && intpart[0] == '-';
  if (neg || (!intpart.empty() && intpart[0] == '+')) intpart = intpart.substr(1);
  std::string alldigits = intpart + fracpart;
  if (alldigits.empty() ||
      !std::all_of(alldigits.begin(), alldigits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error("malformed number: " + text);

  BigInt mant(alldigits.empty() ? "0" : alldigits);
  if (neg) mant = -mant;
  long shift = exp10 - static_cast<long>(fracpart.size());
  BigInt num = mant, den = 1;
  for (long i = 0; i < shift; ++i) num *= 10;
  for (long i = 0; i < -shift; ++i) den *= 10;
  return BigRat(num, den);
}

}  // namespace epist
