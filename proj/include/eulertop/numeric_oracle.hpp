#ifndef EULERTOP_NUMERIC_ORACLE_HPP
#define EULERTOP_NUMERIC_ORACLE_HPP

#include <string>
#include <vector>

#include "eulertop/numeric/real.hpp"
#include "eulertop/picard_fuchs.hpp"

namespace eulertop {

template <class F>
struct TopParamsT {
  F theta1, theta2, theta3, ell;
  F rho, kappa, lambda;
};

using TopParams = TopParamsT<double>;

// Checks 0 < theta1 < theta2 < theta3, the cyclic triangle inequalities and
// ell > 0, then derives
//   rho = sqrt(theta1 (theta3 - theta2) / (theta3 (theta2 - theta1))),
//   kappa = rho - 1/rho,
//   lambda = (ell/theta2) sqrt((theta2 - theta1)(theta3 - theta2)/(theta1 theta3)).
// Throws ValidationError naming the violated constraint.
template <class F>
TopParamsT<F> params_from_inertia(const F& theta1, const F& theta2, const F& theta3, const F& ell);

extern template TopParamsT<double> params_from_inertia(const double&, const double&, const double&, const double&);
extern template TopParamsT<Real> params_from_inertia(const Real&, const Real&, const Real&, const Real&);

enum class QuadratureScheme {
  gauss_legendre,  // adaptive composite Gauss-Legendre after a sine substitution
  tanh_sinh,       // double exponential in the z variable
};

const char* to_string(QuadratureScheme s);

template <class F>
struct QuadratureResultT {
  F value;
  double error_estimate;
  long evaluations;
};

// I_beta+(h) for h > 0, I_beta-(h) for h < 0, valid for
// -rho/2 < h < 1/(2 rho). h = 0 is a DomainError: the limits there are the
// closed-form constants k3 of beta_action. Throws QuadratureError when tol is
// not reached.
template <class F>
QuadratureResultT<F> action_quadrature(const F& kappa, const F& h, double tol,
                                       QuadratureScheme scheme = QuadratureScheme::gauss_legendre);

// T_beta+(h) = -int_{2h}^{1/rho} dx / (sqrt(x (x - 2h)) sqrt(1 - kappa x - x^2)) for h > 0,
// T_beta-(h) = +int_{-rho}^{2h} (same integrand) for h < 0. h = 0 is a
// DomainError (the period diverges logarithmically).
template <class F>
QuadratureResultT<F> period_quadrature(const F& kappa, const F& h, double tol,
                                       QuadratureScheme scheme = QuadratureScheme::tanh_sinh);

// Action in the unscaled variable:
//   (1/pi) int sqrt|(2 E - ell^2 zt) / prod (zt - 1/theta_i)| d zt
// over (2E/ell^2, 1/theta1) for side plus and (1/theta3, 2E/ell^2) for side
// minus, E being the energy before the shift by ell^2/(2 theta2). It equals
// 2 ell I_beta(h) with h = (E - ell^2/(2 theta2)) / (lambda ell).
template <class F>
QuadratureResultT<F> unscaled_action_quadrature(const TopParamsT<F>& params, const F& energy, Side side, double tol);

// h = (E - ell^2 / (2 theta2)) / (lambda ell) and its inverse.
template <class F>
F scaled_energy(const TopParamsT<F>& p, const F& energy) {
  return (energy - p.ell * p.ell / (F(2) * p.theta2)) / (p.lambda * p.ell);
}
template <class F>
F unscaled_energy(const TopParamsT<F>& p, const F& h) {
  return h * p.lambda * p.ell + p.ell * p.ell / (F(2) * p.theta2);
}

// z = (ell/lambda)(zt - 1/theta2), the map taking the unscaled roots to
// rho^-1, 0, -rho.
template <class F>
F scaled_root(const TopParamsT<F>& p, const F& zt) {
  return (p.ell / p.lambda) * (zt - F(1) / p.theta2);
}

// Series evaluation of I_beta+(h) (h > 0) or I_beta-(h) (h < 0) at an exact
// kappa from the symbolic pieces: 2 pi I_beta = k1 2pi I_r + k2 2pi I_s + 2 pi k3.
Real beta_action_series_value(const ActionSeries& basis, const Rational& kappa, const Real& h);

struct VerifyRow {
  Real h;
  Side side;
  Real series;
  Real quadrature;
  double deviation;
  double quadrature_error;
};

struct VerifyReport {
  Rational kappa;
  int order;
  std::vector<VerifyRow> rows;
  double max_deviation = 0.0;
  double side_sum_error = 0.0;  // |I_beta+(0) + I_beta-(0) - 1/2|
  double area_sum_error = 0.0;  // |A+ + A- - pi|
  double disc_radius = 0.0;     // (1/2) min(rho, 1/rho)
};

// Every |h| must lie inside the disc of radius (1/2) min(rho, 1/rho);
// otherwise DomainError names the radius. h = 0 rows compare the exact
// constants.
VerifyReport verify_series_numerics(const Rational& kappa, const std::vector<Real>& samples, int order, double tol,
                                    QuadratureScheme scheme = QuadratureScheme::gauss_legendre);

}  // namespace eulertop

#endif  // EULERTOP_NUMERIC_ORACLE_HPP
