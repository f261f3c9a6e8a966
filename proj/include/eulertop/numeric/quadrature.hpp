#ifndef EULERTOP_NUMERIC_QUADRATURE_HPP
#define EULERTOP_NUMERIC_QUADRATURE_HPP

#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "eulertop/errors.hpp"

namespace eulertop::quadrature {

template <class F>
struct Result {
  F value;
  double error_estimate;
  long evaluations;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], found by
// Newton iteration on P_n at the working precision of F.
template <class F>
std::pair<std::vector<F>, std::vector<F>> gauss_legendre_rule(int n) {
  using std::abs;
  using std::cos;
  const F pi = boost::math::constants::pi<F>();
  const F eps = std::numeric_limits<F>::epsilon();
  std::vector<F> x(static_cast<std::size_t>(n));
  std::vector<F> w(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    F z = cos(pi * (F(i) + F(3) / F(4)) / (F(n) + F(1) / F(2)));
    F dp;
    for (int it = 0; it < 100; ++it) {
      F p0(1);
      F p1 = z;
      for (int k = 2; k <= n; ++k) {
        F p2 = (F(2 * k - 1) * z * p1 - F(k - 1) * p0) / F(k);
        p0 = p1;
        p1 = p2;
      }
      dp = F(n) * (z * p1 - p0) / (z * z - F(1));
      const F step = p1 / dp;
      z -= step;
      if (abs(step) <= eps * F(4)) break;
    }
    // Refresh the derivative at the converged node.
    F p0(1);
    F p1 = z;
    for (int k = 2; k <= n; ++k) {
      F p2 = (F(2 * k - 1) * z * p1 - F(k - 1) * p0) / F(k);
      p0 = p1;
      p1 = p2;
    }
    dp = F(n) * (z * p1 - p0) / (z * z - F(1));
    const F wt = F(2) / ((F(1) - z * z) * dp * dp);
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = wt;
    w[static_cast<std::size_t>(n - 1 - i)] = wt;
  }
  return {std::move(x), std::move(w)};
}

// Adaptive bisection with an n-point rule on each panel. A panel is accepted
// when its two halves agree with the whole to within tol scaled by the panel
// width; the reported estimate is the sum of those differences.
template <class F, class Fn>
Result<F> adaptive_gauss_legendre(Fn&& f, const F& a, const F& b, double tol, int points = 20, int max_depth = 48) {
  using std::abs;
  static thread_local std::map<int, std::pair<std::vector<F>, std::vector<F>>> cache;
  auto found = cache.find(points);
  if (found == cache.end()) found = cache.emplace(points, gauss_legendre_rule<F>(points)).first;
  const std::pair<std::vector<F>, std::vector<F>>* rule = &found->second;
  long evals = 0;
  auto apply = [&](const F& lo, const F& hi) -> F {
    const F mid = (lo + hi) / F(2);
    const F half = (hi - lo) / F(2);
    F acc(0);
    for (std::size_t i = 0; i < rule->first.size(); ++i) acc += rule->second[i] * f(mid + half * rule->first[i]);
    evals += static_cast<long>(rule->first.size());
    return acc * half;
  };

  struct Panel {
    F lo, hi, whole;
    int depth;
  };
  const F total_width = b - a;
  std::vector<Panel> stack{{a, b, apply(a, b), 0}};
  F sum(0);
  F err(0);
  bool exhausted = false;
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const F mid = (p.lo + p.hi) / F(2);
    const F left = apply(p.lo, mid);
    const F right = apply(mid, p.hi);
    const F diff = abs(left + right - p.whole);
    const F local_tol = F(tol) * (p.hi - p.lo) / total_width;
    if (diff <= local_tol || p.depth >= max_depth) {
      if (diff > local_tol) exhausted = true;
      sum += left + right;
      err += diff;
      continue;
    }
    stack.push_back({mid, p.hi, right, p.depth + 1});
    stack.push_back({p.lo, mid, left, p.depth + 1});
  }
  const double e = static_cast<double>(err);
  if (exhausted && e > tol) throw QuadratureError("Gauss-Legendre did not reach the tolerance", e);
  return {sum, e, evals};
}

// Double exponential rule on (a, b). The integrand receives the point x and
// its distances to both endpoints, computed without cancellation, so that
// endpoint singularities can be written in factored form: f(x, x - a, b - x).
template <class F, class Fn>
Result<F> tanh_sinh(Fn&& f, const F& a, const F& b, double tol, int max_level = 12) {
  using std::abs;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sinh;
  using std::sqrt;
  const F pi = boost::math::constants::pi<F>();
  const F half_pi = pi / F(2);
  const F width = b - a;
  // Stop where the node lies closer to an endpoint than d_min * width; with
  // at worst inverse square-root endpoint behaviour the neglected tail is then
  // of order sqrt(d_min) = eps, below any attainable tolerance. Tying d_min to
  // tol would let the cutoff move with tol and escape the error estimate.
  const F eps = std::numeric_limits<F>::epsilon();
  const F d_min = eps * eps;
  // d(t) ~ exp(-2u), u = (pi/2) sinh t.
  const F u_max = -log(d_min) / F(2);
  const F y = u_max / half_pi;
  const F t_max = log(y + sqrt(y * y + F(1)));  // asinh

  long evals = 0;
  auto term = [&](const F& t) -> F {
    const F u = half_pi * sinh(t);
    const F e2 = exp(F(2) * u);
    const F da = width * e2 / (F(1) + e2);  // x - a = width / (1 + e^{-2u})
    const F db = width / (F(1) + e2);       // b - x
    const F x = da <= db ? a + da : b - db;
    const F cu = cosh(u);
    const F weight = width / F(2) * half_pi * cosh(t) / (cu * cu);
    ++evals;
    return weight * f(x, da, db);
  };

  F step(1);
  F sum = term(F(0));
  for (long k = 1; F(k) <= t_max; ++k) sum += term(F(k)) + term(F(-k));
  F estimate = sum * step;
  F prev = estimate;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    step /= F(2);
    for (long k = 1; F(k) * step <= t_max; k += 2) {
      const F t = F(k) * step;
      sum += term(t) + term(-t);
    }
    estimate = sum * step;
    err = static_cast<double>(abs(estimate - prev));
    if (level >= 3 && err <= tol) return {estimate, err, evals};
    prev = estimate;
  }
  throw QuadratureError("tanh-sinh did not reach the tolerance", err);
}

}  // namespace eulertop::quadrature

#endif  // EULERTOP_NUMERIC_QUADRATURE_HPP
