#include "eulertop/rational.hpp"

#include <cctype>
#include <string>

#include "eulertop/errors.hpp"

namespace eulertop {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  return Integer(str, 10);
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Decimal literal with optional fraction and exponent, parsed exactly.
Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    auto exp_part = text.substr(e + 1);
    if (!is_integer_literal(exp_part)) throw UsageError("malformed number: " + std::string(text));
    exponent = std::stol(std::string(exp_part));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw UsageError("malformed number: " + std::string(text));
    }
  }
  if (digits.empty()) throw UsageError("malformed number: " + std::string(text));
  Rational r(Integer(digits, 10));
  long shift = exponent - fraction_digits;
  if (shift > 0) r *= Rational(pow10(static_cast<unsigned long>(shift)));
  if (shift < 0) r /= Rational(pow10(static_cast<unsigned long>(-shift)));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw UsageError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw UsageError("malformed rational: " + std::string(text));
    }
    Integer d = parse_integer(den);
    if (d == 0) throw UsageError("zero denominator: " + std::string(text));
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }
  if (is_integer_literal(text)) return Rational(parse_integer(text));
  return parse_decimal(text);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational harmonic_number(long n) {
  Rational sum(0);
  for (long k = 1; k <= n; ++k) sum += Rational(1, k);
  return sum;
}

Rational odd_harmonic_number(long n) {
  Rational sum(0);
  for (long k = 1; k <= n; ++k) sum += Rational(1, 2 * k - 1);
  return sum;
}

}  // namespace eulertop
