#ifndef EULERTOP_RATIONAL_HPP
#define EULERTOP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eulertop {

// Arbitrary precision rational, always kept in canonical form
// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", or a finite decimal such as "-0.125" or "1e-3" exactly.
// Throws UsageError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& value);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// H_n = sum_{k=1}^n 1/k and O_n = sum_{k=1}^n 1/(2k-1); both 0 for n <= 0.
Rational harmonic_number(long n);
Rational odd_harmonic_number(long n);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace eulertop

#endif  // EULERTOP_RATIONAL_HPP
