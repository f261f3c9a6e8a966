#ifndef EULERTOP_TESTS_GENERATORS_HPP
#define EULERTOP_TESTS_GENERATORS_HPP

// Seeded generators for property tests.

#include <random>

#include "eulertop/power_series.hpp"
#include "eulertop/rho_laurent.hpp"

namespace eulertop::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational(long max_num = 9, long max_den = 7) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  KappaPoly kappa_poly(int max_degree = 3) {
    std::vector<Rational> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational());
    return KappaPoly(std::move(c));
  }

  PowerSeries series(Variable v, int order, int max_degree = 2) {
    PowerSeries s(v, order);
    for (int n = 0; n <= order; ++n) s[n] = kappa_poly(max_degree);
    return s;
  }

  // f(0) = 0, f'(0) = 1.
  PowerSeries tangent_identity(Variable v, int order, int max_degree = 2) {
    PowerSeries s = series(v, order, max_degree);
    s[0] = KappaPoly();
    s[1] = KappaPoly(1);
    return s;
  }

  RationalSeries rational_series(Variable v, int order) {
    RationalSeries s(v, order);
    for (int n = 0; n <= order; ++n) s[n] = rational();
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace eulertop::testing

#endif  // EULERTOP_TESTS_GENERATORS_HPP
