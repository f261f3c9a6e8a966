#include <doctest.h>

#include <cmath>

#include "eulertop/numeric_oracle.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace eulertop;
using eulertop::testing::frac;
using eulertop::testing::Gen;

namespace {

// I_beta(h) at kappa = 1/2 from an independent 30-digit mpmath run
// (ellipe/ellippi closed forms checked against mpmath.quad).
struct Sample {
  const char* h;
  const char* value;
};
constexpr Sample kActionSamples[] = {
    {"0.02", "0.191027299245430532563342431957"},
    {"0.005", "0.204916742403120523563278966495"},
    {"-0.02", "0.269066444331182735644154872752"},
    {"-0.005", "0.282901000104068317297520843244"},
};

double rel(const Real& a, const Real& b) { return static_cast<double>(abs(a - b) / abs(b)); }

}  // namespace

TEST_CASE("params_from_inertia examples") {
  const TopParams p = params_from_inertia(1.0, 2.0, 3.0, 1.0);
  CHECK(p.rho == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(p.kappa == doctest::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(p.lambda == doctest::Approx(0.5 * std::sqrt(1.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(params_from_inertia(1.0, 1.0, 2.0, 1.0), ValidationError);
  CHECK_THROWS_AS(params_from_inertia(2.0, 1.0, 3.0, 1.0), ValidationError);
  CHECK_THROWS_AS(params_from_inertia(1.0, 2.0, 4.0, 1.0), ValidationError);
  CHECK_THROWS_AS(params_from_inertia(1.0, 2.0, 3.0, 0.0), ValidationError);
  CHECK(rho_from_kappa(0.0) == 1.0);
}

TEST_CASE("action quadrature against the reference values") {
  const Real kappa = to_real(frac(1, 2));
  for (const Sample& s : kActionSamples) {
    const Real h(s.h);
    const Real expect(s.value);
    for (QuadratureScheme scheme : {QuadratureScheme::gauss_legendre, QuadratureScheme::tanh_sinh}) {
      const QuadratureResultT<Real> r = action_quadrature(kappa, h, 1e-25, scheme);
      CHECK(rel(r.value, expect) < 1e-24);
    }
    const QuadratureResultT<double> d = action_quadrature(0.5, std::stod(s.h), 1e-13);
    CHECK(d.value == doctest::Approx(static_cast<double>(expect)).epsilon(1e-12));
  }
}

TEST_CASE("action quadrature domain") {
  CHECK_THROWS_AS(action_quadrature(0.5, 0.0, 1e-10), DomainError);
  const double rho = rho_from_kappa(0.5);
  CHECK_THROWS_AS(action_quadrature(0.5, 1.0 / (2 * rho) + 1e-9, 1e-10), DomainError);
  CHECK_THROWS_AS(action_quadrature(0.5, -rho / 2 - 1e-9, 1e-10), DomainError);
}

TEST_CASE("symmetric top: the two sides split evenly") {
  for (double h : {0.01, 0.05, 0.2}) {
    const double plus = action_quadrature(0.0, h, 1e-13).value;
    const double minus = action_quadrature(0.0, -h, 1e-13).value;
    CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
    CHECK(std::abs(plus + minus - 0.5) < 4 * h * std::abs(std::log(h)) + h);
  }
}

TEST_CASE("period equals 2 pi dI/dh") {
  const Real kappa = to_real(frac(1, 2));
  const Real step("1e-5");
  for (const char* hs : {"0.02", "-0.02"}) {
    const Real h(hs);
    const Real up = action_quadrature(kappa, Real(h + step), 1e-30).value;
    const Real down = action_quadrature(kappa, Real(h - step), 1e-30).value;
    const Real diff = Real(2) * boost::math::constants::pi<Real>() * (up - down) / (Real(2) * step);
    const Real t = period_quadrature(kappa, h, 1e-30).value;
    CHECK(static_cast<double>(abs(diff - t)) < 1e-6);
    const Real t_gl = period_quadrature(kappa, h, 1e-30, QuadratureScheme::gauss_legendre).value;
    CHECK(rel(t_gl, t) < 1e-25);
  }
  CHECK(period_quadrature(0.5, 0.02, 1e-12).value == doctest::Approx(-5.28561823100838).epsilon(1e-12));
  CHECK(period_quadrature(0.5, -0.02, 1e-12).value == doctest::Approx(5.25288568657287).epsilon(1e-12));
  CHECK_THROWS_AS(period_quadrature(0.5, 0.0, 1e-10), DomainError);
}

TEST_CASE("period asymptotics near the separatrix") {
  const double k = 0.5;
  const double c = 0.5 * std::log(64.0 / (k * k + 4.0));
  for (double h : {1e-4, 1e-5}) {
    const double tp = period_quadrature(k, h, 1e-12).value;
    const double tm = period_quadrature(k, -h, 1e-12).value;
    CHECK(std::abs(tp - std::log(h) + c) < 20 * h * std::abs(std::log(h)));
    CHECK(std::abs(tm + std::log(h) - c) < 20 * h * std::abs(std::log(h)));
  }
}

TEST_CASE("quadrature error estimates are honest") {
  for (QuadratureScheme scheme : {QuadratureScheme::gauss_legendre, QuadratureScheme::tanh_sinh}) {
    for (double h : {0.03, 0.004, -0.004, -0.03}) {
      double tol = 1e-6;
      QuadratureResultT<Real> prev = action_quadrature(to_real(frac(1, 3)), Real(h), tol, scheme);
      for (int i = 0; i < 8; ++i) {
        tol /= 2;
        const QuadratureResultT<Real> next = action_quadrature(to_real(frac(1, 3)), Real(h), tol, scheme);
        CHECK(prev.error_estimate >= 0);
        CHECK(static_cast<double>(abs(next.value - prev.value)) <= prev.error_estimate + 1e-40);
        prev = next;
      }
    }
  }
}

TEST_CASE("series and quadrature agree at kappa = 1/2") {
  std::vector<Real> samples;
  for (const Sample& s : kActionSamples) samples.emplace_back(s.h);
  samples.emplace_back(0);
  const VerifyReport r = verify_series_numerics(frac(1, 2), samples, 30, 1e-30);
  CHECK(r.max_deviation < 1e-20);
  CHECK(r.side_sum_error < 1e-40);
  CHECK(r.area_sum_error < 1e-40);
  for (const VerifyRow& row : r.rows) {
    if (row.h == 0) continue;
    for (const Sample& s : kActionSamples) {
      if (row.h == Real(s.h)) CHECK(rel(row.series, Real(s.value)) < 1e-20);
    }
  }
  CHECK_THROWS_AS(verify_series_numerics(frac(1, 2), {Real("0.5")}, 30, 1e-20), DomainError);
}

TEST_CASE("series deviation does not grow with N") {
  const std::vector<Real> samples = {Real("0.02"), Real("-0.02")};
  double prev = 1.0;
  for (int n : {10, 20, 30, 40}) {
    const double dev = verify_series_numerics(frac(1, 2), samples, n, 1e-40).max_deviation;
    CHECK(dev <= prev);
    prev = dev;
  }
}

TEST_CASE("property: side sum and area identity over rho") {
  Gen gen(1000);
  for (int i = 0; i < 20; ++i) {
    const double rho = std::exp(gen.real(std::log(0.1), std::log(10.0)));
    const double k = rho - 1 / rho;
    const double s = atom_value(Atom::inv_pi_atan_inv_rho, k) + atom_value(Atom::inv_pi_atan_rho, k);
    const double a = atom_value(Atom::area_plus, k) + atom_value(Atom::area_minus, k);
    CHECK(std::abs(s - 0.5) < 1e-12);
    CHECK(std::abs(a - M_PI) < 1e-12);
  }
}

TEST_CASE("property: unscaled action equals 2 ell I(h)") {
  Gen gen(1100);
  for (int i = 0; i < 10; ++i) {
    const double t1 = gen.real(0.5, 2.0);
    const double t2 = t1 + gen.real(0.1, 1.0);
    const double t3 = std::min(t2 + gen.real(0.1, 1.0), t1 + t2 - 0.01);
    const double ell = gen.real(0.5, 3.0);
    const TopParamsT<Real> p = params_from_inertia(Real(t1), Real(t2), Real(t3), Real(ell));
    const Real bound = Real(0.4) * (p.rho < 1 ? p.rho : Real(1) / p.rho);
    for (double frac_h : {0.3, -0.3, 0.8, -0.8}) {
      const Real h = bound * Real(frac_h);
      const Real e = unscaled_energy(p, h);
      CHECK(static_cast<double>(abs(scaled_energy(p, e) - h)) < 1e-40);
      const Side side = frac_h > 0 ? Side::plus : Side::minus;
      const Real lhs = unscaled_action_quadrature(p, e, side, 1e-20).value;
      const Real rhs = Real(2) * p.ell * action_quadrature(p.kappa, h, 1e-20).value;
      CHECK(static_cast<double>(abs(lhs - rhs)) < 1e-10);
    }
  }
}

TEST_CASE("property: root correspondence") {
  Gen gen(1200);
  for (int i = 0; i < 10; ++i) {
    const double t1 = gen.real(0.5, 2.0);
    const double t2 = t1 + gen.real(0.1, 1.0);
    const double t3 = std::min(t2 + gen.real(0.1, 1.0), t1 + t2 - 0.01);
    const TopParamsT<Real> p = params_from_inertia(Real(t1), Real(t2), Real(t3), Real(gen.real(0.5, 3.0)));
    CHECK(static_cast<double>(abs(scaled_root(p, Real(1) / p.theta1) - Real(1) / p.rho)) < 1e-40);
    CHECK(static_cast<double>(abs(scaled_root(p, Real(1) / p.theta2))) < 1e-40);
    CHECK(static_cast<double>(abs(scaled_root(p, Real(1) / p.theta3) + p.rho)) < 1e-40);
  }
}
