#include "eulertop/numeric_oracle.hpp"

#include <cmath>
#include <sstream>

#include "eulertop/numeric/quadrature.hpp"

namespace eulertop {

namespace {

template <class F>
std::string show(const F& x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

template <class F>
F pi_of() {
  return boost::math::constants::pi<F>();
}

template <class F>
QuadratureResultT<F> wrap(const quadrature::Result<F>& r, const F& scale) {
  using std::abs;
  return {r.value * scale, r.error_estimate * static_cast<double>(abs(scale)), r.evaluations};
}

template <class F>
void check_h(const F& kappa, const F& h, const F& rho) {
  if (h == F(0)) throw DomainError("h = 0 lies on the separatrix; use the closed-form limit");
  if (h > F(0) && !(h < F(1) / (F(2) * rho))) {
    throw DomainError("h = " + show(h) + " outside 0 < h < 1/(2 rho) = " + show(F(1) / (F(2) * rho)) +
                      " at kappa = " + show(kappa));
  }
  if (h < F(0) && !(h > -rho / F(2))) {
    throw DomainError("h = " + show(h) + " outside -rho/2 = " + show(-rho / F(2)) + " < h < 0 at kappa = " +
                      show(kappa));
  }
}

}  // namespace

const char* to_string(QuadratureScheme s) {
  return s == QuadratureScheme::gauss_legendre ? "gauss_legendre" : "tanh_sinh";
}

template <class F>
TopParamsT<F> params_from_inertia(const F& theta1, const F& theta2, const F& theta3, const F& ell) {
  using std::sqrt;
  if (!(theta1 > F(0)) || !(theta2 > F(0)) || !(theta3 > F(0))) {
    throw ValidationError("moments of inertia must be positive");
  }
  if (!(ell > F(0))) throw ValidationError("ell > 0 violated");
  if (theta1 == theta2) throw ValidationError("theta1 < theta2 violated: degenerate theta1 = theta2");
  if (theta2 == theta3) throw ValidationError("theta2 < theta3 violated: degenerate theta2 = theta3");
  if (!(theta1 < theta2)) throw ValidationError("theta1 < theta2 violated: moments must be ordered");
  if (!(theta2 < theta3)) throw ValidationError("theta2 < theta3 violated: moments must be ordered");
  if (theta1 > theta2 + theta3) throw ValidationError("triangle inequality theta1 <= theta2 + theta3 violated");
  if (theta2 > theta1 + theta3) throw ValidationError("triangle inequality theta2 <= theta1 + theta3 violated");
  if (theta3 > theta1 + theta2) throw ValidationError("triangle inequality theta3 <= theta1 + theta2 violated");
  TopParamsT<F> p{theta1, theta2, theta3, ell, F(0), F(0), F(0)};
  p.rho = sqrt(theta1 * (theta3 - theta2) / (theta3 * (theta2 - theta1)));
  p.kappa = p.rho - F(1) / p.rho;
  p.lambda = ell / theta2 * sqrt((theta2 - theta1) * (theta3 - theta2) / (theta1 * theta3));
  return p;
}

template <class F>
QuadratureResultT<F> action_quadrature(const F& kappa, const F& h, double tol, QuadratureScheme scheme) {
  using std::acos;
  using std::cos;
  using std::sin;
  using std::sqrt;
  const F rho = rho_from_kappa(kappa);
  check_h(kappa, h, rho);
  const F pi = pi_of<F>();
  const F inv_two_pi = F(1) / (F(2) * pi);
  const F rho2 = rho * rho;
  const F two_h_rho = F(2) * h * rho;

  if (scheme == QuadratureScheme::gauss_legendre) {
    if (h > F(0)) {
      // p^2 = (sin^2 q - 2 h rho) / (rho^2 + sin^2 q); with sin a = sqrt(2 h rho)
      // the numerator is sin(q - a) sin(q + a). q = pi/2 + q0 sin(theta)
      // puts the turning points at theta = -+pi/2.
      const F q0 = acos(sqrt(two_h_rho));
      const F quarter_pi = pi / F(4);
      auto f = [&](const F& theta) -> F {
        const F c = cos(quarter_pi - theta / F(2));
        const F s = sin(quarter_pi - theta / F(2));
        const F one_plus = F(2) * c * c;   // 1 + sin(theta)
        const F one_minus = F(2) * s * s;  // 1 - sin(theta)
        const F sin_q = cos(q0 * sin(theta));
        const F num = sin(q0 * one_plus) * sin(q0 * one_minus);
        if (!(num > F(0))) return F(0);
        return q0 * cos(theta) * sqrt(num / (rho2 + sin_q * sin_q));
      };
      const F half_pi = pi / F(2);
      return wrap(quadrature::adaptive_gauss_legendre(f, -half_pi, half_pi, tol * 2 * M_PI), inv_two_pi);
    }
    // Minus side: (1/2pi) int_0^pi (1 - p) dq, symmetric about pi/2.
    auto f = [&](const F& q) -> F {
      const F s = sin(q);
      return F(1) - sqrt((s * s - two_h_rho) / (rho2 + s * s));
    };
    return wrap(quadrature::adaptive_gauss_legendre(f, F(0), pi / F(2), tol * M_PI), F(2) * inv_two_pi);
  }

  if (h > F(0)) {
    // (1/2pi) int_{2h}^{1/rho} sqrt((z - 2h) / (z (z + rho) (1/rho - z))) dz
    auto f = [&](const F& z, const F& da, const F& db) -> F { return sqrt(da / (z * (z + rho) * db)); };
    return wrap(quadrature::tanh_sinh(f, F(2) * h, F(1) / rho, tol * 2 * M_PI), inv_two_pi);
  }
  // (1/2pi) int_{-rho}^{2h} sqrt((2h - z) / (z (z + rho) (z - 1/rho))) dz
  auto f = [&](const F& z, const F& da, const F& db) -> F { return sqrt(db / ((-z) * da * (F(1) / rho - z))); };
  return wrap(quadrature::tanh_sinh(f, -rho, F(2) * h, tol * 2 * M_PI), inv_two_pi);
}

template <class F>
QuadratureResultT<F> period_quadrature(const F& kappa, const F& h, double tol, QuadratureScheme scheme) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const F rho = rho_from_kappa(kappa);
  check_h(kappa, h, rho);
  const F pi = pi_of<F>();
  const F a = h > F(0) ? F(2) * h : -rho;
  const F b = h > F(0) ? F(1) / rho : F(2) * h;
  const F sign = h > F(0) ? F(-1) : F(1);

  if (scheme == QuadratureScheme::tanh_sinh) {
    if (h > F(0)) {
      auto f = [&](const F& x, const F& da, const F& db) -> F { return F(1) / sqrt(x * da * (x + rho) * db); };
      return wrap(quadrature::tanh_sinh(f, a, b, tol), sign);
    }
    auto f = [&](const F& x, const F& da, const F& db) -> F {
      return F(1) / sqrt((-x) * db * da * (F(1) / rho - x));
    };
    return wrap(quadrature::tanh_sinh(f, a, b, tol), sign);
  }

  // x = mid + half sin(theta) absorbs both inverse square roots at the ends.
  const F mid = (a + b) / F(2);
  const F half = (b - a) / F(2);
  const F half_pi = pi / F(2);
  if (h > F(0)) {
    auto f = [&](const F& theta) -> F {
      const F x = mid + half * sin(theta);
      return F(1) / sqrt(x * (x + rho));
    };
    return wrap(quadrature::adaptive_gauss_legendre(f, -half_pi, half_pi, tol), sign);
  }
  auto f = [&](const F& theta) -> F {
    const F x = mid + half * sin(theta);
    return F(1) / sqrt((-x) * (F(1) / rho - x));
  };
  return wrap(quadrature::adaptive_gauss_legendre(f, -half_pi, half_pi, tol), sign);
}

template <class F>
QuadratureResultT<F> unscaled_action_quadrature(const TopParamsT<F>& p, const F& energy, Side side, double tol) {
  using std::abs;
  using std::sqrt;
  const F inv1 = F(1) / p.theta1;
  const F inv2 = F(1) / p.theta2;
  const F inv3 = F(1) / p.theta3;
  const F ell2 = p.ell * p.ell;
  const F c = F(2) * energy / ell2;
  const F inv_pi = F(1) / pi_of<F>();
  if (side == Side::plus) {
    if (!(c > inv2 && c < inv1)) throw DomainError("energy outside the plus range (1/theta2, 1/theta1) of 2E/ell^2");
    auto f = [&](const F& zt, const F& da, const F& db) -> F {
      return sqrt(ell2 * da / (db * abs(zt - inv2) * abs(zt - inv3)));
    };
    return wrap(quadrature::tanh_sinh(f, c, inv1, tol * M_PI), inv_pi);
  }
  if (!(c > inv3 && c < inv2)) throw DomainError("energy outside the minus range (1/theta3, 1/theta2) of 2E/ell^2");
  auto f = [&](const F& zt, const F& da, const F& db) -> F {
    return sqrt(ell2 * db / (da * abs(zt - inv1) * abs(zt - inv2)));
  };
  return wrap(quadrature::tanh_sinh(f, inv3, c, tol * M_PI), inv_pi);
}

Real beta_action_series_value(const ActionSeries& basis, const Rational& kappa, const Real& h) {
  if (h == 0) throw DomainError("series value at h = 0 is the constant k3");
  const Side side = h > 0 ? Side::plus : Side::minus;
  const BetaAction beta = beta_action(side);
  const Real k = to_real(kappa);
  auto eval = [&](const PowerSeries& s) -> Real {
    const RationalSeries r = at_kappa(s, kappa);
    Real acc = 0;
    for (int n = r.order(); n >= 0; --n) acc = acc * h + to_real(r[n]);
    return acc;
  };
  const Real ir = eval(basis.two_pi_I_r);
  const Real is = eval(basis.two_pi_I_s.log_part) * log(abs(h)) + eval(basis.two_pi_I_s.regular);
  const Real two_pi_i = beta.k1.evaluate(k) * ir + Real(beta.k2) * is + beta.area.evaluate(k);
  return two_pi_i / (2 * boost::math::constants::pi<Real>());
}

VerifyReport verify_series_numerics(const Rational& kappa, const std::vector<Real>& samples, int order, double tol,
                                    QuadratureScheme scheme) {
  const Real k = to_real(kappa);
  const Real rho = rho_from_kappa(k);
  const Real radius = (rho < 1 ? rho : 1 / rho) / 2;
  VerifyReport rep;
  rep.kappa = kappa;
  rep.order = order;
  rep.disc_radius = static_cast<double>(radius);
  for (const Real& h : samples) {
    if (!(abs(h) < radius)) {
      throw DomainError("sample h = " + show(h) + " outside the disc |h| < " + show(radius) +
                        " = min(rho, 1/rho)/2");
    }
  }
  const ActionSeries basis = build_action_series(order);
  const Real pi = boost::math::constants::pi<Real>();
  for (const Real& h : samples) {
    if (h == 0) {
      for (Side side : {Side::plus, Side::minus}) {
        const Real series = beta_action(side).k3.evaluate(k);
        const Real limit = side == Side::plus ? atan(1 / rho) / pi : atan(rho) / pi;
        rep.rows.push_back({h, side, series, limit, static_cast<double>(abs(series - limit)), 0.0});
      }
      continue;
    }
    const Real series = beta_action_series_value(basis, kappa, h);
    const QuadratureResultT<Real> q = action_quadrature(k, h, tol, scheme);
    rep.rows.push_back({h, h > 0 ? Side::plus : Side::minus, series, q.value,
                        static_cast<double>(abs(series - q.value)), q.error_estimate});
  }
  for (const auto& r : rep.rows) rep.max_deviation = std::max(rep.max_deviation, r.deviation);
  const Real k3_sum = beta_action(Side::plus).k3.evaluate(k) + beta_action(Side::minus).k3.evaluate(k);
  rep.side_sum_error = static_cast<double>(abs(k3_sum - Real(1) / 2));
  const Real area_sum = beta_action(Side::plus).area.evaluate(k) + beta_action(Side::minus).area.evaluate(k);
  rep.area_sum_error = static_cast<double>(abs(area_sum - pi));
  return rep;
}

template TopParamsT<double> params_from_inertia(const double&, const double&, const double&, const double&);
template TopParamsT<Real> params_from_inertia(const Real&, const Real&, const Real&, const Real&);
template QuadratureResultT<double> action_quadrature(const double&, const double&, double, QuadratureScheme);
template QuadratureResultT<Real> action_quadrature(const Real&, const Real&, double, QuadratureScheme);
template QuadratureResultT<double> period_quadrature(const double&, const double&, double, QuadratureScheme);
template QuadratureResultT<Real> period_quadrature(const Real&, const Real&, double, QuadratureScheme);
template QuadratureResultT<double> unscaled_action_quadrature(const TopParamsT<double>&, const double&, Side, double);
template QuadratureResultT<Real> unscaled_action_quadrature(const TopParamsT<Real>&, const Real&, Side, double);

}  // namespace eulertop
