#ifndef EULERTOP_NUMERIC_REAL_HPP
#define EULERTOP_NUMERIC_REAL_HPP

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "eulertop/rational.hpp"

namespace eulertop {

// 50 significant decimal digits. Expression templates are off so that the
// type behaves like a plain value in generic code and lambdas.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

template <class F>
F from_rational(const Rational& q);

template <>
inline double from_rational<double>(const Rational& q) {
  return q.get_d();
}

template <>
inline Real from_rational<Real>(const Rational& q) {
  return to_real(q);
}

inline std::string to_string(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace eulertop

#endif  // EULERTOP_NUMERIC_REAL_HPP
