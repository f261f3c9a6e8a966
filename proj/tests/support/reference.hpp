#ifndef EULERTOP_TESTS_REFERENCE_HPP
#define EULERTOP_TESTS_REFERENCE_HPP

// Published coefficient tables, assembled from their factored forms.

#include <vector>

#include "eulertop/poly.hpp"
#include "eulertop/rational.hpp"

namespace eulertop::testing {

inline Rational frac(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// c0 + c2 k^2 + c4 k^4 + c6 k^6
inline KappaPoly even(long c0, long c2 = 0, long c4 = 0, long c6 = 0) {
  return KappaPoly(std::vector<Rational>{frac(c0), 0, frac(c2), 0, frac(c4), 0, frac(c6)});
}

inline KappaPoly k2p4() { return even(4, 1); }

// H*(J): index n holds the J^n coefficient, n = 0..7.
inline std::vector<KappaPoly> bnf_reference() {
  const KappaPoly k = kappa();
  return {
      KappaPoly(),
      KappaPoly(1),
      k * frac(-1, 4),
      k2p4() * frac(-1, 16),
      k * k2p4() * frac(-5, 128),
      k2p4() * even(12, 11) * frac(-3, 1024),
      k * k2p4() * even(20, 9) * frac(-7, 2048),
      k2p4() * even(720, 1776, 527) * frac(-1, 16384),
  };
}

// Regular tail of sigma: index n holds the J^n coefficient, n = 0..7.
inline std::vector<KappaPoly> sigma_tail_reference() {
  const KappaPoly k = kappa();
  return {
      KappaPoly(),
      KappaPoly(),
      k * frac(-3, 8),
      even(32, 15) * frac(-1, 96),
      k * even(36, 11) * frac(-5, 512),
      even(2672, 4200, 945) * frac(-1, 10240),
      k * even(3600, 2960, 527) * frac(-7, 40960),
      even(241664, 801360, 446040, 65709) * frac(-1, 688128),
  };
}

inline std::vector<KappaPoly> frobenius_a_reference() {
  const KappaPoly k = kappa();
  return {
      KappaPoly(1),
      k * frac(1, 2),
      even(4, 3) * frac(3, 16),
      k * even(12, 5) * frac(5, 32),
      even(48, 120, 35) * frac(35, 1024),
      k * even(240, 280, 63) * frac(63, 2048),
  };
}

inline std::vector<KappaPoly> frobenius_b_reference() {
  const KappaPoly k = kappa();
  return {
      KappaPoly(),
      k,
      even(20, 21) * frac(1, 16),
      k * even(372, 185) * frac(1, 96),
      even(18672, 56760, 18655) * frac(1, 6144),
      k * even(313680, 416360, 102501) * frac(1, 20480),
  };
}

// Parity of p under kappa -> -kappa: +1 even, -1 odd, 0 mixed.
inline int kappa_parity(const KappaPoly& p) {
  if (p.is_zero()) return 1;
  if (p.reflected() == p) return 1;
  if (p.reflected() == p * frac(-1)) return -1;
  return 0;
}

}  // namespace eulertop::testing

#endif  // EULERTOP_TESTS_REFERENCE_HPP
