#ifndef EULERTOP_PICARD_FUCHS_HPP
#define EULERTOP_PICARD_FUCHS_HPP

#include <string>
#include <vector>

#include "eulertop/errors.hpp"
#include "eulertop/log_series.hpp"
#include "eulertop/power_series.hpp"
#include "eulertop/symbolic.hpp"

namespace eulertop {

// Polynomial in h with coefficients in Q[kappa].
using HPoly = Poly<KappaPoly>;

inline HPoly h_variable() { return HPoly::variable(); }

// [w(2h)]^2 = 2h (4h^2 + 2 kappa h - 1), where w(z)^2 = z (z^2 + kappa z - 1).
HPoly w_squared_at_2h();

// sum_i c_i d^i zeta/dh^i = dv with zeta = sqrt(2h - z) dz / w(z) and
// v = w(z) / (2h - z)^(3/2).
struct PFCoefficients {
  HPoly c0, c1, c2, c3;
};

// Builds both sides of the differential identity as cubics in z and solves
// the 4x4 system for c_0..c_3 over Q[kappa][h]. Throws InternalError if a
// pivot is not a nonzero constant.
PFCoefficients derive_pf_coefficients();

enum class FrobeniusMethod { recursion, closed_form };

// The coefficient ring R only needs + - * and multiplication by Rational, so
// the same code serves symbolic kappa (R = KappaPoly, kappa = kappa()) and a
// fixed rational kappa (R = Rational).
template <class R>
std::vector<R> frobenius_a_recursion(int n_max, const R& kappa) {
  if (n_max < 0) throw UsageError("Frobenius order must be >= 0");
  std::vector<R> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  a.push_back(R(1));
  const R half_kappa = kappa * Rational(1, 2);
  for (long n = 1; n <= n_max; ++n) {
    R t = half_kappa * a[static_cast<std::size_t>(n - 1)];
    t = t * Rational(2 * n - 1);
    if (n >= 2) t += a[static_cast<std::size_t>(n - 2)] * Rational(2 * n - 3);
    a.push_back(t * Rational(2 * n - 1, n * n));
  }
  return a;
}

// b_n from the a table (b_0 = b_(-1) = 0).
template <class R>
std::vector<R> frobenius_b_recursion(const std::vector<R>& a, const R& kappa) {
  std::vector<R> b;
  b.reserve(a.size());
  b.push_back(R(0));
  const R half_kappa = kappa * Rational(1, 2);
  for (long n = 1; n < static_cast<long>(a.size()); ++n) {
    const auto i = static_cast<std::size_t>(n);
    R inner = kappa * a[i - 1];
    R t = half_kappa * b[i - 1];
    inner += t * Rational(n * (2 * n - 1));
    if (n >= 2) inner += b[i - 2] * Rational(n * (2 * n - 3));
    R total = inner * Rational(2 * n - 1);
    if (n >= 2) total += a[i - 2] * Rational(8 * n - 6);
    b.push_back(total * Rational(1, n * n * n));
  }
  return b;
}

// 2 O_n + 2 O_(n-k) - 2 H_n.
Rational frobenius_f(long n, long k);

// (1/4^n) C(2n, n) (2n-2k)! / (k! (n-k)! (n-2k)!), the weight of
// (kappa/2)^(n-2k) in a_n.
Rational frobenius_weight(long n, long k);

// Terminating trinomial sums; with_f multiplies each term by f_(n,k).
template <class R>
R frobenius_closed_form_term(long n, const R& kappa, bool with_f) {
  const R half_kappa = kappa * Rational(1, 2);
  R acc(0);
  for (long k = 0; 2 * k <= n; ++k) {
    Rational w = frobenius_weight(n, k);
    if (with_f) w *= frobenius_f(n, k);
    if (is_zero(w)) continue;
    R power(1);
    for (long j = 0; j < n - 2 * k; ++j) power = power * half_kappa;
    acc += power * w;
  }
  return acc;
}

template <class R>
std::vector<R> frobenius_a_closed_form(int n_max, const R& kappa) {
  if (n_max < 0) throw UsageError("Frobenius order must be >= 0");
  std::vector<R> a;
  for (long n = 0; n <= n_max; ++n) a.push_back(frobenius_closed_form_term(n, kappa, false));
  return a;
}

template <class R>
std::vector<R> frobenius_b_closed_form(int n_max, const R& kappa) {
  if (n_max < 0) throw UsageError("Frobenius order must be >= 0");
  std::vector<R> b;
  for (long n = 0; n <= n_max; ++n) b.push_back(frobenius_closed_form_term(n, kappa, true));
  return b;
}

std::vector<KappaPoly> frobenius_a(int n_max, FrobeniusMethod method);
std::vector<KappaPoly> frobenius_b(int n_max, FrobeniusMethod method);

struct FrobeniusTable {
  int order;
  std::vector<KappaPoly> a;
  std::vector<KappaPoly> b;
};

// Recursion output, checked entrywise against the closed forms.
FrobeniusTable frobenius_table(int n_max);

// Period and action series at h = 0. The actions are stored multiplied by
// 2 pi so that every coefficient stays rational:
//   T_r = sum a_n h^n,  T_s = T_r log|h| + sum b_n h^n,
//   2 pi I_r = int T_r,  2 pi I_s = int T_s (both vanish at h = 0).
template <class R>
struct ActionSeriesT {
  TruncatedSeries<R> T_r;
  LogSeriesT<R> T_s;
  TruncatedSeries<R> two_pi_I_r;
  LogSeriesT<R> two_pi_I_s;
};

using ActionSeries = ActionSeriesT<KappaPoly>;

template <class R>
ActionSeriesT<R> build_action_series_at(int order, const R& kappa) {
  if (order < 1) throw UsageError("action series need order >= 1");
  std::vector<R> a = frobenius_a_recursion(order, kappa);
  std::vector<R> b = frobenius_b_recursion(a, kappa);
  TruncatedSeries<R> t_r(Variable::h, a);
  LogSeriesT<R> t_s(t_r, TruncatedSeries<R>(Variable::h, b));
  TruncatedSeries<R> i_r = integrate_termwise(t_r);
  LogSeriesT<R> i_s = integrate_termwise(t_s);
  return {std::move(t_r), std::move(t_s), std::move(i_r), std::move(i_s)};
}

// T series through h^order, actions through h^(order+1).
ActionSeries build_action_series(int order);

// Series with finitely many negative powers, as produced by differentiating
// L log|h| + R: coefficient k of each channel multiplies h^(min_power + k).
struct LaurentLogSeries {
  int min_power = 0;
  std::vector<KappaPoly> log_part;
  std::vector<KappaPoly> regular;

  // Highest power whose coefficients are known.
  int max_power() const { return min_power + static_cast<int>(regular.size()) - 1; }
  bool is_zero() const;
  std::string to_string() const;
};

enum class PFEquation {
  I,  // c3 I''' + c2 I'' + c1 I' + c0 I
  T,  // c3 T'' + c2 T' + c1 T, valid because c0 = 0
};

// Substitutes a series into the Picard-Fuchs operator. The result is known
// through h^(order - 3) for the I form and h^(order - 2) for the T form.
LaurentLogSeries pf_residual(const PowerSeries& f, PFEquation which);
LaurentLogSeries pf_residual(const LogSeries& f, PFEquation which);

enum class Side { plus, minus };

inline const char* to_string(Side s) { return s == Side::plus ? "plus" : "minus"; }

// I_beta = k1 I_r + k2 I_s + k3 with
//   k1 = -+ (1/2) log(64/(kappa^2+4)),  k2 = +-1,  k3 = (1/pi) atan(rho^-+1).
struct BetaAction {
  Side side;
  SymbolicConstant k1;
  int k2;
  SymbolicConstant k3;
  // 2 pi k3, the area constant of the side.
  SymbolicConstant area;
};

struct BetaActions {
  BetaAction plus;
  BetaAction minus;
  ActionSeries basis;
};

BetaAction beta_action(Side side);
BetaActions assemble_beta_actions(int order);

}  // namespace eulertop

#endif  // EULERTOP_PICARD_FUCHS_HPP
